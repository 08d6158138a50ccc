use std::fmt::Write;

use gbhard_core::problems::{Item, KnapsackInstance};

use super::{content_lines, parse_numbers, ParseError};

/// `W V n` then `n` lines `w_i v_i`. Blank lines and `#` comments are
/// skipped.
pub fn parse_knapsack(text: &str) -> Result<KnapsackInstance, ParseError> {
    let mut lines = content_lines(text, "#");
    let (hl, header) = lines
        .next()
        .ok_or_else(|| ParseError::new(1, "missing `W V n` header"))?;
    let [capacity, target, n] = parse_numbers::<3>(hl, header, "`W V n`")?;
    let mut items = Vec::new();
    for (no, line) in lines {
        let [weight, value] = parse_numbers::<2>(no, line, "an item `w v`")?;
        if weight == 0 {
            return Err(ParseError::new(no, "item weight must be positive"));
        }
        items.push(Item { weight, value });
    }
    if items.len() as u64 != n {
        return Err(ParseError::new(
            hl,
            format!("header declares {n} items, found {}", items.len()),
        ));
    }
    KnapsackInstance::new(capacity, target, items).map_err(|e| ParseError::new(hl, e.to_string()))
}

pub fn write_knapsack(k: &KnapsackInstance) -> String {
    let mut out = format!("{} {} {}\n", k.capacity(), k.target(), k.items().len());
    for it in k.items() {
        writeln!(out, "{} {}", it.weight, it.value).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_round_trips() {
        let text = "10 10 2\n6 8\n5 5\n";
        let k = parse_knapsack(text).unwrap();
        assert_eq!((k.capacity(), k.target(), k.items().len()), (10, 10, 2));
        assert_eq!(write_knapsack(&k), text);
    }

    #[test]
    fn errors() {
        assert_eq!(parse_knapsack("10 10 2\n6 8\n").unwrap_err().line, 1);
        assert_eq!(parse_knapsack("10 10 1\n0 8\n").unwrap_err().line, 2);
        assert_eq!(parse_knapsack("10 10\n").unwrap_err().line, 1);
        assert_eq!(parse_knapsack("1 1 1\n\n2 -3\n").unwrap_err().line, 3);
    }
}
