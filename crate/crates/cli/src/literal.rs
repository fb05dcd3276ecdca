//! Textual forms of states and strategies accepted on the command line.
//!
//! A state is either `width` binary digits or `width / 4` hex digits; a
//! `0b` or `0x` prefix forces one reading. A strategy is a comma-separated
//! list of 1-based cell indices, possibly empty.

use chaos_iter::{StateVector, Strategy};

pub fn parse_state(text: &str, width: usize) -> Result<StateVector, String> {
    let text = text.trim();
    let parsed = if let Some(bits) = text.strip_prefix("0b") {
        StateVector::from_binary(bits)
    } else if let Some(hex) = text.strip_prefix("0x") {
        StateVector::from_hex(hex)
    } else if text.len() == width && text.chars().all(|c| c == '0' || c == '1') {
        StateVector::from_binary(text)
    } else if width % 4 == 0 && text.len() == width / 4 {
        StateVector::from_hex(text)
    } else {
        return Err(format!(
            "state `{text}` is neither {width} binary digits nor {} hex digits",
            if width % 4 == 0 { (width / 4).to_string() } else { "n/a".into() }
        ));
    };
    let state = parsed.map_err(|e| format!("state `{text}`: {e}"))?;
    if state.width() != width {
        return Err(format!(
            "state `{text}` has {} cells, expected {width}",
            state.width()
        ));
    }
    Ok(state)
}

pub fn parse_strategy(text: &str, width: usize) -> Result<Strategy, String> {
    let text = text.trim();
    let terms = if text.is_empty() {
        Vec::new()
    } else {
        text.split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| format!("strategy term `{}` is not a cell index", t.trim()))
            })
            .collect::<Result<Vec<_>, _>>()?
    };
    Strategy::new(width, terms).map_err(|e| format!("strategy: {e}"))
}
