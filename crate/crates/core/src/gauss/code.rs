//! Textual Gauss codes.
//!
//! ```text
//! code      := component (";" component)*
//! component := token*
//! token     := ("O" | "U") label ("+" | "-")
//! label     := [A-Za-z0-9]+
//! ```
//!
//! Roles are case-insensitive and whitespace is ignored everywhere. Each label
//! occurs once with role `O` and once with role `U`, with the same sign.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use super::{ChordId, EndpointRef, GaussDiagram, Role, Sign};
use crate::error::{Error, Result};

/// A parsed code together with the mapping from input labels to chord ids.
#[derive(Clone, Debug)]
pub struct ParsedCode {
    pub diagram: GaussDiagram,
    pub labels: Vec<(String, ChordId)>,
}

impl ParsedCode {
    pub fn chord(&self, label: &str) -> Result<ChordId> {
        self.labels
            .iter()
            .find(|(l, _)| l == label)
            .map(|&(_, id)| id)
            .ok_or_else(|| Error::UnknownChord(label.to_string()))
    }
}

struct Occurrence {
    role: Role,
    sign: Sign,
}

impl GaussDiagram {
    pub fn parse(code: &str) -> Result<GaussDiagram> {
        Ok(GaussDiagram::parse_labeled(code)?.diagram)
    }

    /// Parses a code, numbering chords 1, 2, ... by first appearance.
    pub fn parse_labeled(code: &str) -> Result<ParsedCode> {
        let chars: Vec<(usize, char)> = code
            .chars()
            .enumerate()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();

        let mut circles: Vec<Vec<EndpointRef>> = vec![Vec::new()];
        let mut ids: HashMap<String, ChordId> = HashMap::new();
        let mut labels: Vec<(String, ChordId)> = Vec::new();
        let mut seen: HashMap<ChordId, Occurrence> = HashMap::new();
        let mut complete: Vec<bool> = Vec::new();

        let mut i = 0;
        while i < chars.len() {
            let (col, ch) = chars[i];
            let role = match ch {
                ';' => {
                    circles.push(Vec::new());
                    i += 1;
                    continue;
                }
                'O' | 'o' => Role::Over,
                'U' | 'u' => Role::Under,
                _ => {
                    return Err(Error::Syntax {
                        column: col,
                        message: format!("unexpected `{ch}`, expected O, U or `;`"),
                    })
                }
            };
            i += 1;

            let mut label = String::new();
            while let Some(&(_, c)) = chars.get(i) {
                if !c.is_ascii_alphanumeric() {
                    break;
                }
                label.push(c);
                i += 1;
            }
            let end_col = chars.get(i).map_or(code.chars().count(), |&(c, _)| c);
            if label.is_empty() {
                return Err(Error::Syntax { column: end_col, message: "expected a label".into() });
            }
            let sign = match chars.get(i) {
                Some((_, '+')) => Sign::Positive,
                Some((_, '-')) => Sign::Negative,
                Some(&(c, other)) => {
                    return Err(Error::Syntax {
                        column: c,
                        message: format!("unexpected `{other}`, expected `+` or `-`"),
                    })
                }
                None => {
                    return Err(Error::Syntax { column: end_col, message: "expected `+` or `-`".into() })
                }
            };
            i += 1;

            let id = match ids.get(&label) {
                Some(&id) => id,
                None => {
                    let id = ChordId(labels.len() as u32 + 1);
                    ids.insert(label.clone(), id);
                    labels.push((label.clone(), id));
                    complete.push(false);
                    id
                }
            };
            match seen.get(&id) {
                None => {
                    seen.insert(id, Occurrence { role, sign });
                }
                Some(prev) if prev.role == role || complete[id.0 as usize - 1] => {
                    return Err(Error::DuplicateRole { label, role: role.letter() });
                }
                Some(prev) if prev.sign != sign => return Err(Error::SignMismatch(label)),
                Some(_) => complete[id.0 as usize - 1] = true,
            }
            circles.last_mut().expect("at least one circle").push(EndpointRef::new(id, role));
        }

        if let Some(((label, _), _)) = labels.iter().zip(&complete).find(|(_, &done)| !done) {
            return Err(Error::UnpairedLabel(label.clone()));
        }
        let signs: Vec<(ChordId, Sign)> = seen.iter().map(|(&id, o)| (id, o.sign)).collect();
        let diagram = GaussDiagram::new(circles, signs)?;
        Ok(ParsedCode { diagram, labels })
    }

    /// Serializes with chords renumbered 1, 2, ... by first appearance.
    pub fn to_code(&self) -> String {
        let mut names: HashMap<ChordId, u32> = HashMap::new();
        let mut out = String::new();
        for (i, circle) in self.circles.iter().enumerate() {
            if i > 0 {
                out.push(';');
            }
            for e in circle {
                let next = names.len() as u32 + 1;
                let n = *names.entry(e.chord).or_insert(next);
                out.push(e.role.letter());
                out.push_str(&n.to_string());
                out.push(self.chords[&e.chord].sign.symbol());
            }
        }
        out
    }
}

impl FromStr for GaussDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GaussDiagram::parse(s)
    }
}

impl fmt::Display for GaussDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_code())
    }
}

/// Drops `#` comment lines and joins the rest, so fixture files can carry
/// provenance notes above the code.
pub fn strip_comments(text: &str) -> String {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.starts_with('#'))
        .collect::<Vec<_>>()
        .join("")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kink() {
        let d = GaussDiagram::parse("O1+U1+").unwrap();
        assert_eq!(d.circle_count(), 1);
        assert_eq!(d.chord_count(), 1);
        assert_eq!(d.sign(ChordId(1)).unwrap(), Sign::Positive);
        assert!(d.chord(ChordId(1)).unwrap().is_self());
    }

    #[test]
    fn two_component_link() {
        let d = GaussDiagram::parse("O1+U2+;U1+O2+").unwrap();
        assert_eq!(d.circle_count(), 2);
        assert!(d.chords().all(|c| !c.is_self() && c.sign == Sign::Positive));
    }

    #[test]
    fn kishino_shape() {
        let d = GaussDiagram::parse("O1-O2+U1-U2+U3+O4-U4-O3+").unwrap();
        assert_eq!(d.classify().self_chords.len(), 4);
    }

    #[test]
    fn normalizes_whitespace_case_and_labels() {
        assert_eq!(GaussDiagram::parse("O1+U1+").unwrap().to_code(), "O1+U1+");
        assert_eq!(GaussDiagram::parse(" o1 + u1 + ").unwrap().to_code(), "O1+U1+");
        assert_eq!(GaussDiagram::parse("Ox-Oy+Ux-Uy+").unwrap().to_code(), "O1-O2+U1-U2+");
        assert_eq!(GaussDiagram::parse("U9+O9+").unwrap().to_code(), "U1+O1+");
    }

    #[test]
    fn empty_components() {
        let d = GaussDiagram::parse("O1+U1+;").unwrap();
        assert_eq!(d.circle_count(), 2);
        assert_eq!(d.to_code(), "O1+U1+;");
        assert_eq!(GaussDiagram::parse("").unwrap().circle_count(), 1);
        assert_eq!(GaussDiagram::parse(";;").unwrap().to_code(), ";;");
    }

    #[test]
    fn errors() {
        assert_eq!(GaussDiagram::parse("O1+"), Err(Error::UnpairedLabel("1".into())));
        assert_eq!(
            GaussDiagram::parse("O1+O1+"),
            Err(Error::DuplicateRole { label: "1".into(), role: 'O' })
        );
        assert_eq!(
            GaussDiagram::parse("O1+U1+U1+"),
            Err(Error::DuplicateRole { label: "1".into(), role: 'U' })
        );
        assert_eq!(GaussDiagram::parse("O1+U1-"), Err(Error::SignMismatch("1".into())));
        assert!(matches!(GaussDiagram::parse("O1+X1+"), Err(Error::Syntax { column: 3, .. })));
        assert!(matches!(GaussDiagram::parse("O1+U1"), Err(Error::Syntax { column: 5, .. })));
        assert!(matches!(GaussDiagram::parse("O+U1+"), Err(Error::Syntax { column: 1, .. })));
        assert!(matches!(GaussDiagram::parse("O1*U1+"), Err(Error::Syntax { column: 2, .. })));
    }

    #[test]
    fn labeled_lookup() {
        let p = GaussDiagram::parse_labeled("Oa+Ob-Ua+Ub-").unwrap();
        assert_eq!(p.chord("b").unwrap(), ChordId(2));
        assert!(p.chord("c").is_err());
    }

    #[test]
    fn comments() {
        assert_eq!(strip_comments("# Kishino\nO1+U1+\n  # x\n;"), "O1+U1+;");
    }
}
