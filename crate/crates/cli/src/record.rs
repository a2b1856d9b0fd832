//! Result records: `key: value` lines in a fixed order per command.

use std::fmt;

use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ResultRecord {
    fields: Vec<(String, String)>,
}

impl ResultRecord {
    pub fn new(command: &str) -> Self {
        let mut r = ResultRecord::default();
        r.push("command", command);
        r
    }

    pub fn push(&mut self, key: &str, value: impl fmt::Display) -> &mut Self {
        self.fields.push((key.to_string(), value.to_string()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn fields(&self) -> &[(String, String)] {
        &self.fields
    }

    /// Inverse of the `Display` form.
    pub fn parse(text: &str) -> Option<Self> {
        let fields = text
            .lines()
            .map(|l| {
                l.split_once(": ")
                    .map(|(k, v)| (k.to_string(), v.to_string()))
            })
            .collect::<Option<Vec<_>>>()?;
        Some(ResultRecord { fields })
    }
}

impl fmt::Display for ResultRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in &self.fields {
            writeln!(f, "{k}: {v}")?;
        }
        Ok(())
    }
}

/// SHA-256 over labelled inputs. Each part is framed by its label and
/// byte length so that different splits never collide.
pub fn inputs_digest(parts: &[(&str, &[u8])]) -> String {
    let mut h = Sha256::new();
    for (label, bytes) in parts {
        h.update(label.as_bytes());
        h.update([0u8]);
        h.update((bytes.len() as u64).to_le_bytes());
        h.update(bytes);
    }
    hex::encode(h.finalize())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_parse_agree() {
        let mut r = ResultRecord::new("fixed");
        r.push("value", "-1/7").push("witness", "0 1 | 1");
        let text = r.to_string();
        assert_eq!(text, "command: fixed\nvalue: -1/7\nwitness: 0 1 | 1\n");
        assert_eq!(ResultRecord::parse(&text).unwrap(), r);
        assert_eq!(r.get("value"), Some("-1/7"));
    }

    #[test]
    fn digest_is_framed() {
        let a = inputs_digest(&[("x", b"ab"), ("y", b"c")]);
        let b = inputs_digest(&[("x", b"a"), ("y", b"bc")]);
        assert_ne!(a, b);
        assert_eq!(a.len(), 64);
    }
}
