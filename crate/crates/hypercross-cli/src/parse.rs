//! Input parsing for vector arguments.

use hypercross::VecN;

/// Parses a comma-separated vector literal. Scientific notation is accepted;
/// whitespace around components is tolerated. Malformed components are
/// reported with their 1-based position.
pub fn parse_vector(name: &str, text: &str) -> Result<VecN, String> {
    let mut coords = Vec::new();
    for (i, raw) in text.split(',').enumerate() {
        let component = raw.trim();
        if component.is_empty() {
            return Err(format!("vector '{name}': component {} is empty", i + 1));
        }
        match component.parse::<f64>() {
            Ok(v) => coords.push(v),
            Err(_) => {
                return Err(format!(
                    "vector '{name}': component {} ('{component}') is not a number",
                    i + 1
                ))
            }
        }
    }
    Ok(VecN::new(coords))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_plain_and_scientific() {
        let v = parse_vector("u", "1,-2.5,3e-4").unwrap();
        assert_eq!(v.coords(), &[1.0, -2.5, 3e-4]);
        let w = parse_vector("u", " 1 , 2 ").unwrap();
        assert_eq!(w.coords(), &[1.0, 2.0]);
    }

    #[test]
    fn reports_position_of_bad_component() {
        let err = parse_vector("a", "1,two,3").unwrap_err();
        assert!(err.contains("component 2"), "{err}");
        let err = parse_vector("a", "1,,3").unwrap_err();
        assert!(err.contains("component 2"), "{err}");
    }
}
