use std::fs;
use std::path::Path;

use inertia::caps::Caps;

/// Caps from an optional TOML file, then `key=value` overrides.
///
/// ```toml
/// group_order = 200000
/// fuzz_word_length = 12
/// ```
pub fn load_caps(path: Option<&Path>, overrides: &[String]) -> Result<Caps, String> {
    let mut table = match path {
        Some(p) => {
            let text = fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?;
            text.parse::<toml::Table>()
                .map_err(|e| format!("{}: {e}", p.display()))?
        }
        None => toml::Table::new(),
    };
    for item in overrides {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| format!("expected key=value, got {item:?}"))?;
        let n: i64 = value
            .trim()
            .parse()
            .map_err(|_| format!("cap {key} needs an integer, got {value:?}"))?;
        table.insert(key.trim().to_string(), toml::Value::Integer(n));
    }
    table.try_into().map_err(|e: toml::de::Error| format!("config: {}", e.message()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overrides_and_defaults() {
        let caps = load_caps(None, &["group_order=7".into()]).unwrap();
        assert_eq!(caps.group_order, 7);
        assert_eq!(caps.fuzz_word_length, Caps::default().fuzz_word_length);
        assert!(load_caps(None, &["nonsense=1".into()]).is_err());
        assert!(load_caps(None, &["group_order".into()]).is_err());
    }
}
