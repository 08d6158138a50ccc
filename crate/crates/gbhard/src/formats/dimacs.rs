use std::fmt::Write;

use gbhard_core::problems::{CnfFormula, Literal};

use super::ParseError;

/// DIMACS CNF: `c` comment lines, one `p cnf <vars> <clauses>` header,
/// then zero-terminated clauses (a clause may span lines). A `%` line ends
/// the input, as in the SATLIB benchmark files.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut clauses: Vec<Vec<Literal>> = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    let mut clause_line = 0;
    let mut last_line = 0;
    for (no, raw) in text.lines().enumerate() {
        let no = no + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        last_line = no;
        if line.starts_with('p') {
            if header.is_some() {
                return Err(ParseError::new(no, "second `p` header"));
            }
            let f: Vec<&str> = line.split_whitespace().collect();
            let parsed = match f.as_slice() {
                ["p", "cnf", v, c] => v.parse::<usize>().ok().zip(c.parse::<usize>().ok()),
                _ => None,
            };
            let (v, c) = parsed.ok_or_else(|| {
                ParseError::new(
                    no,
                    format!("malformed header `{line}`, expected `p cnf <vars> <clauses>`"),
                )
            })?;
            header = Some((v, c, no));
            continue;
        }
        let Some((vars, _, _)) = header else {
            return Err(ParseError::new(no, "clause before the `p cnf` header"));
        };
        for tok in line.split_whitespace() {
            let lit: i64 = tok
                .parse()
                .map_err(|_| ParseError::new(no, format!("`{tok}` is not a literal")))?;
            if current.is_empty() {
                clause_line = no;
            }
            if lit == 0 {
                if current.is_empty() {
                    return Err(ParseError::new(no, "empty clause"));
                }
                clauses.push(std::mem::take(&mut current));
                continue;
            }
            let var = lit.unsigned_abs() as usize;
            if var > vars {
                return Err(ParseError::new(
                    no,
                    format!("literal {lit} out of range for {vars} variables"),
                ));
            }
            current.push(Literal::new(var, lit < 0));
        }
    }
    let Some((vars, expected, header_line)) = header else {
        return Err(ParseError::new(last_line.max(1), "missing `p cnf` header"));
    };
    if !current.is_empty() {
        return Err(ParseError::new(clause_line, "clause not terminated by 0"));
    }
    if clauses.len() != expected {
        return Err(ParseError::new(
            header_line,
            format!(
                "header declares {expected} clauses, found {}",
                clauses.len()
            ),
        ));
    }
    CnfFormula::new(vars, clauses).map_err(|e| ParseError::new(header_line, e.to_string()))
}

pub fn write_dimacs(f: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", f.num_vars(), f.clauses().len());
    for clause in f.clauses() {
        for lit in clause {
            write!(out, "{} ", lit.to_dimacs()).unwrap();
        }
        out.push_str("0\n");
    }
    out
}
