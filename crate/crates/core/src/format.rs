//! On-disk sequence files: a two-line text form and a single-line JSON form.
//!
//! ```text
//! q=11 n=2 period=3
//! 0,1,4
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sequence::RingSequence;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceFile {
    pub q: u32,
    pub n: usize,
    pub period: usize,
    pub terms: Vec<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FileFormat {
    Text,
    Json,
}

impl SequenceFile {
    pub fn new(s: &RingSequence, n: usize) -> Self {
        Self {
            q: s.q(),
            n,
            period: s.period(),
            terms: s.terms().to_vec(),
        }
    }

    pub fn sequence(&self) -> Result<RingSequence> {
        RingSequence::new(self.q, self.terms.clone())
    }

    pub fn to_text(&self) -> String {
        let terms: Vec<String> = self.terms.iter().map(u32::to_string).collect();
        format!(
            "q={} n={} period={}\n{}\n",
            self.q,
            self.n,
            self.period,
            terms.join(",")
        )
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("plain struct serializes");
        s.push('\n');
        s
    }

    pub fn render(&self, format: FileFormat) -> String {
        match format {
            FileFormat::Text => self.to_text(),
            FileFormat::Json => self.to_json(),
        }
    }

    pub fn parse(input: &str) -> Result<Self> {
        if input.trim_start().starts_with('{') {
            Self::parse_json(input)
        } else {
            Self::parse_text(input)
        }
    }

    pub fn parse_json(input: &str) -> Result<Self> {
        let file: SequenceFile = serde_json::from_str(input).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        file.validate(1)?;
        Ok(file)
    }

    pub fn parse_text(input: &str) -> Result<Self> {
        let mut lines = input.lines();
        let header = lines.next().ok_or_else(|| perr(1, 1, "missing header line"))?;
        let mut fields: [Option<u64>; 3] = [None; 3];
        let mut col = 1;
        for token in header.split(' ') {
            if !token.is_empty() {
                let (key, value) = token
                    .split_once('=')
                    .ok_or_else(|| perr(1, col, format!("expected key=value, got {token:?}")))?;
                let slot = match key {
                    "q" => 0,
                    "n" => 1,
                    "period" => 2,
                    _ => return Err(perr(1, col, format!("unknown key {key:?}"))),
                };
                if fields[slot].is_some() {
                    return Err(perr(1, col, format!("duplicate key {key:?}")));
                }
                let v = value.parse::<u64>().map_err(|_| {
                    perr(1, col + key.len() + 1, format!("invalid integer {value:?}"))
                })?;
                fields[slot] = Some(v);
            }
            col += token.len() + 1;
        }
        let get = |slot: usize, name: &str| {
            fields[slot].ok_or_else(|| perr(1, 1, format!("header is missing {name}")))
        };
        let q = u32::try_from(get(0, "q")?).map_err(|_| perr(1, 1, "q out of range"))?;
        let n = get(1, "n")? as usize;
        let period = get(2, "period")? as usize;
        let body = lines.next().ok_or_else(|| perr(2, 1, "missing terms line"))?;
        let mut terms = Vec::new();
        let mut col = 1;
        for token in body.split(',') {
            let trimmed = token.trim();
            let v = trimmed
                .parse::<u32>()
                .map_err(|_| perr(2, col, format!("invalid term {trimmed:?}")))?;
            terms.push(v);
            col += token.len() + 1;
        }
        for (k, extra) in lines.enumerate() {
            if !extra.trim().is_empty() {
                return Err(perr(3 + k, 1, "unexpected content after terms"));
            }
        }
        let file = SequenceFile {
            q,
            n,
            period,
            terms,
        };
        file.validate(2)?;
        Ok(file)
    }

    fn validate(&self, terms_line: usize) -> Result<()> {
        if self.period != self.terms.len() {
            return Err(perr(
                1,
                1,
                format!(
                    "period {} does not match {} terms",
                    self.period,
                    self.terms.len()
                ),
            ));
        }
        self.sequence().map_err(|e| match e {
            Error::TermOutOfRange { index, .. } => {
                perr(terms_line, 1, format!("term {index}: {e}"))
            }
            other => other,
        })?;
        Ok(())
    }
}

fn perr(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}
