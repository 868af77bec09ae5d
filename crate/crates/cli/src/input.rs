//! Graph input: a graph6 argument, a file of graph6 lines, or standard input.

use std::io::{self, BufRead, IsTerminal};
use std::path::Path;

use regfactor::graph::{parse_graph6, Graph};

/// Where the graphs came from; a single argument gives a single result.
pub enum Source {
    Single(String),
    Batch(Vec<String>),
}

pub fn read_source(arg: Option<&str>) -> Result<Source, String> {
    match arg {
        Some("-") => read_stdin().map(Source::Batch),
        Some(a) if Path::new(a).is_file() => {
            let text = std::fs::read_to_string(a).map_err(|e| format!("cannot read {a}: {e}"))?;
            non_empty(lines(&text), a).map(Source::Batch)
        }
        Some(a) => Ok(Source::Single(a.to_string())),
        None => read_stdin().map(Source::Batch),
    }
}

fn lines(text: &str) -> Vec<String> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(String::from)
        .collect()
}

fn non_empty(v: Vec<String>, origin: &str) -> Result<Vec<String>, String> {
    if v.is_empty() {
        Err(format!("no graphs in {origin}; pass a graph6 string, a file, or graph6 lines on standard input"))
    } else {
        Ok(v)
    }
}

fn read_stdin() -> Result<Vec<String>, String> {
    let stdin = io::stdin();
    if stdin.is_terminal() {
        return Err("no graph given; pass a graph6 string, a file, or graph6 lines on standard input".into());
    }
    let mut text = String::new();
    for line in stdin.lock().lines() {
        let line = line.map_err(|e| format!("cannot read standard input: {e}"))?;
        text.push_str(&line);
        text.push('\n');
    }
    non_empty(lines(&text), "standard input")
}

pub fn parse(text: &str) -> Result<Graph, String> {
    parse_graph6(text).map_err(|e| format!("malformed graph6 {text:?}: {e}"))
}

/// Comma-separated vertex or degree list; empty string is the empty list.
pub fn parse_list(text: &str) -> Result<Vec<usize>, String> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| format!("{s:?} is not a non-negative integer")))
        .collect()
}
