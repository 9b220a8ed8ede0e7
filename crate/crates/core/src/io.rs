//! The numeric instance format.
//!
//! ```text
//! # free comment lines
//! p setaf 3 2
//! # arg 1 a
//! 3 1 2
//! 2 3
//! ```
//!
//! The header gives the number of arguments and attacks. Each attack line
//! lists the head followed by the distinct tail members. Lines starting with
//! `#` are comments; `# arg <id> <name>` lines name arguments.

use std::collections::BTreeMap;
use std::fmt::Write;

use thiserror::Error;

use crate::argset::{ArgId, ArgSet};
use crate::framework::{Attack, FrameworkError, Setaf};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Framework(#[from] FrameworkError),
}

/// A parsed instance: the framework, argument names, and the comment lines
/// that are not part of the name table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub framework: Setaf,
    pub names: BTreeMap<ArgId, String>,
    pub comments: Vec<String>,
}

impl Instance {
    pub fn new(framework: Setaf) -> Self {
        Instance {
            framework,
            names: BTreeMap::new(),
            comments: Vec::new(),
        }
    }
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

fn number(token: &str, line: usize) -> Result<u64, ParseError> {
    token
        .parse()
        .map_err(|_| syntax(line, format!("expected a number, found `{token}`")))
}

pub fn parse(text: &str) -> Result<Instance, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut names = BTreeMap::new();
    let mut comments = Vec::new();
    let mut attacks = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            let words: Vec<&str> = comment.split_whitespace().collect();
            if let ["arg", id, name] = words[..] {
                let id = number(id, line)?;
                if id == 0 || id > u32::MAX as u64 {
                    return Err(syntax(line, format!("argument id {id} out of range")));
                }
                names.insert(ArgId::new(id as u32), name.to_string());
            } else {
                comments.push(raw.to_string());
            }
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        let Some((n, m)) = header else {
            match tokens[..] {
                ["p", "setaf", n, m] => {
                    header = Some((number(n, line)? as usize, number(m, line)? as usize));
                    continue;
                }
                _ => return Err(syntax(line, "expected header `p setaf <n> <m>`")),
            }
        };
        if tokens.len() < 2 {
            return Err(syntax(line, "attack line needs a head and at least one tail member"));
        }
        let mut ids = Vec::with_capacity(tokens.len());
        for token in &tokens {
            let id = number(token, line)?;
            if id == 0 || id > n as u64 {
                return Err(syntax(line, format!("argument {id} outside 1..={n}")));
            }
            ids.push(ArgId::new(id as u32));
        }
        let tail: ArgSet = ids[1..].iter().copied().collect();
        if tail.len() != ids.len() - 1 {
            return Err(syntax(line, "repeated tail member"));
        }
        if attacks.len() == m {
            return Err(syntax(line, format!("more than the declared {m} attacks")));
        }
        attacks.push(Attack::new(tail, ids[0]));
    }
    let Some((n, m)) = header else {
        return Err(syntax(last_line.max(1), "missing header `p setaf <n> <m>`"));
    };
    if attacks.len() != m {
        return Err(syntax(
            last_line,
            format!("declared {m} attacks, found {}", attacks.len()),
        ));
    }
    if let Some((&id, _)) = names.iter().find(|(id, _)| id.index() >= n) {
        return Err(FrameworkError::IdOutOfRange { id: id.get(), n }.into());
    }
    Ok(Instance {
        framework: Setaf::new(n, attacks)?,
        names,
        comments,
    })
}

/// Writes the free comments, the header, the name table and the attacks in
/// their stored order, with tails ascending. Inverse of [`parse`] on text in
/// that layout.
pub fn serialize(instance: &Instance) -> String {
    let sf = &instance.framework;
    let mut out = String::new();
    for comment in &instance.comments {
        out.push_str(comment);
        out.push('\n');
    }
    writeln!(out, "p setaf {} {}", sf.num_arguments(), sf.attacks().len()).unwrap();
    for (id, name) in &instance.names {
        writeln!(out, "# arg {id} {name}").unwrap();
    }
    for att in sf.attacks() {
        out.push_str(&att.head().to_string());
        for t in att.tail() {
            write!(out, " {t}").unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn serialize_framework(sf: &Setaf) -> String {
    serialize(&Instance::new(sf.clone()))
}

/// Parses a whitespace-separated list of argument ids, checking them
/// against `n`.
pub fn parse_extension(text: &str, n: usize) -> Result<ArgSet, String> {
    let mut out = ArgSet::new();
    for token in text.split_whitespace() {
        let token = token.trim_matches(|c| c == '[' || c == ']' || c == ',');
        if token.is_empty() {
            continue;
        }
        let id: u64 = token.parse().map_err(|_| format!("`{token}` is not an argument id"))?;
        if id == 0 || id > n as u64 {
            return Err(format!("argument {id} outside 1..={n}"));
        }
        out.insert(ArgId::new(id as u32));
    }
    Ok(out)
}
