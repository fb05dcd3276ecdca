use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::thread;

use chaos_iter::avalanche::{avalanche_sample, AvalancheStats};
use chaos_iter::devaney::{
    construct_periodic_point, construct_sensitivity_witness, construct_transit_point,
};
use chaos_iter::hash::{digest, HashConfig, Mode};
use chaos_iter::{MetricConfig, Negation, Orbit, Point, Strategy};

use crate::literal::{parse_state, parse_strategy};
use crate::{
    AvalancheArgs, Command, HashArgs, ModeArg, OrbitArgs, PeriodicArgs, PointArgs,
    SensitivityArgs, TransitArgs,
};

/// A failure, split by who is at fault: the invocation (exit 1) or the
/// request itself (exit 2).
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(String),
    Output(io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Domain(_) | CliError::Output(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Domain(m) => f.write_str(m),
            CliError::Output(e) => write!(f, "writing output: {e}"),
        }
    }
}

impl From<chaos_iter::Error> for CliError {
    fn from(e: chaos_iter::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Output(e)
    }
}

type CliResult = Result<(), CliError>;

pub fn run(command: Command, out: &mut impl Write) -> CliResult {
    match command {
        Command::Hash(args) => hash(args, out),
        Command::Avalanche(args) => avalanche(args, out),
        Command::Orbit(args) => orbit(args, out),
        Command::Periodic(args) => periodic(args, out),
        Command::Transit(args) => transit(args, out),
        Command::Sensitivity(args) => sensitivity(args, out),
    }
}

fn config(mode: ModeArg) -> HashConfig {
    HashConfig::new(match mode {
        ModeArg::Paper => Mode::PaperText,
        ModeArg::Bytes => Mode::RawBytes,
    })
}

fn hash(args: HashArgs, out: &mut impl Write) -> CliResult {
    let input = match (args.source.input, args.source.text) {
        (Some(path), _) => fs::read(&path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?,
        (None, Some(text)) => text.into_bytes(),
        (None, None) => return Err(CliError::Usage("one of --in or --text is required".into())),
    };
    let d = digest(&input, &config(args.mode))?;
    writeln!(out, "{d}")?;
    Ok(())
}

fn usize_arg(value: u64, name: &str) -> Result<usize, CliError> {
    usize::try_from(value).map_err(|_| CliError::Usage(format!("--{name} {value} is too large")))
}

fn avalanche(args: AvalancheArgs, out: &mut impl Write) -> CliResult {
    let samples = usize_arg(args.samples, "samples")?;
    let length = usize_arg(args.length, "length")?;
    let cfg = config(args.mode);
    let workers = thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
        .min(samples);
    // Each sample owns its random stream, so striding the indices across
    // workers gives the same record as a sequential run.
    let counts = thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let cfg = &cfg;
                scope.spawn(move || {
                    (w..samples)
                        .step_by(workers)
                        .map(|i| avalanche_sample(i as u64, length, args.seed, cfg).map(|c| (i, c)))
                        .collect::<chaos_iter::Result<Vec<_>>>()
                })
            })
            .collect();
        let mut counts = vec![0usize; samples];
        for h in handles {
            for (i, c) in h.join().expect("avalanche worker panicked")? {
                counts[i] = c;
            }
        }
        Ok::<_, chaos_iter::Error>(counts)
    })?;
    let stats = AvalancheStats::from_counts(length, counts)?;
    let bins: Vec<String> = stats.histogram.iter().map(|c| c.to_string()).collect();
    writeln!(out, "samples={}", stats.samples)?;
    writeln!(out, "length={}", stats.message_length)?;
    writeln!(out, "mean={:.6}", stats.mean)?;
    writeln!(out, "min={:.6}", stats.min)?;
    writeln!(out, "max={:.6}", stats.max)?;
    writeln!(out, "bins={}", bins.join(","))?;
    Ok(())
}

fn width(value: u64) -> Result<usize, CliError> {
    usize_arg(value, "width")
}

fn point(width: usize, state: &str, strategy: &str) -> Result<Point, CliError> {
    let state = parse_state(state, width).map_err(CliError::Usage)?;
    let strategy = parse_strategy(strategy, width).map_err(CliError::Usage)?;
    Ok(Point::new(strategy, state)?)
}

fn point_arg(args: &PointArgs) -> Result<Point, CliError> {
    point(width(args.width)?, &args.state, &args.strategy)
}

fn terms(s: &Strategy) -> String {
    let t: Vec<String> = s.terms().iter().map(|c| c.to_string()).collect();
    t.join(",")
}

fn verdict(out: &mut impl Write, passed: bool) -> CliResult {
    if passed {
        writeln!(out, "PASS")?;
        Ok(())
    } else {
        writeln!(out, "FAIL")?;
        Err(CliError::Domain("witness failed its own check".into()))
    }
}

fn orbit(args: OrbitArgs, out: &mut impl Write) -> CliResult {
    let x = point_arg(&args.point)?;
    if args.steps > x.strategy().len() {
        return Err(chaos_iter::Error::ExhaustedStrategy {
            step: x.strategy().len(),
        }
        .into());
    }
    for state in Orbit::new(&Negation, &x)?.take(args.steps + 1) {
        writeln!(out, "{state}")?;
    }
    Ok(())
}

fn periodic(args: PeriodicArgs, out: &mut impl Write) -> CliResult {
    let x = point_arg(&args.point)?;
    let cfg = MetricConfig::default();
    let w = construct_periodic_point(&x, args.epsilon, &cfg)?;
    let check = w.verify(&x, args.epsilon, &cfg)?;
    writeln!(out, "state={}", w.point.state())?;
    writeln!(out, "period_terms={}", terms(w.point.strategy()))?;
    writeln!(out, "period={}", w.period)?;
    writeln!(out, "k0={}", w.k0)?;
    writeln!(out, "distance={:.12}", check.distance)?;
    writeln!(out, "returns_to_start={}", check.returns_to_start)?;
    verdict(out, check.passed())
}

fn transit(args: TransitArgs, out: &mut impl Write) -> CliResult {
    let n = width(args.width)?;
    let a = point(n, &args.state_a, &args.strategy_a)?;
    let b = point(n, &args.state_b, &args.strategy_b)?;
    let cfg = MetricConfig::default();
    let w = construct_transit_point(&a, args.radius_a, &b, args.radius_b, &cfg)?;
    let check = w.verify(&a, args.radius_a, &b, args.radius_b, &cfg)?;
    writeln!(out, "state={}", w.point.state())?;
    writeln!(out, "strategy={}", terms(w.point.strategy()))?;
    writeln!(out, "k0={}", w.k0)?;
    writeln!(out, "k1={}", w.k1)?;
    writeln!(out, "k2={}", w.k2)?;
    writeln!(out, "steps={}", w.steps)?;
    writeln!(out, "distance_to_a={:.12}", check.distance_to_a)?;
    writeln!(out, "landed_state={}", check.landed.state())?;
    writeln!(out, "distance_to_b={:.12}", check.distance_to_b)?;
    verdict(out, check.passed())
}

fn sensitivity(args: SensitivityArgs, out: &mut impl Write) -> CliResult {
    let x = point_arg(&args.point)?;
    let cfg = MetricConfig::default();
    let w = construct_sensitivity_witness(&x, args.radius, &cfg)?;
    let check = w.verify(&x, &cfg)?;
    writeln!(out, "neighbor_state={}", w.neighbor.state())?;
    writeln!(out, "neighbor_strategy={}", terms(w.neighbor.strategy()))?;
    writeln!(out, "divergence_step={}", w.divergence_step)?;
    writeln!(out, "initial_distance={:.12}", check.initial_distance)?;
    writeln!(out, "state_separation={}", check.state_separation)?;
    writeln!(out, "separation={:.12}", check.separation)?;
    verdict(out, check.passed(args.radius))
}
