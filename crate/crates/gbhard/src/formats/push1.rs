use std::collections::BTreeSet;

use gbhard_core::problems::Push1Instance;
use gbhard_core::Cell;

use super::ParseError;

/// Rectangular grid, one row per line: `.` empty, `B` block, `R` robot,
/// `W` win, `X` robot on the win cell, `*` block on the win cell. Exactly
/// one robot and one win. Trailing blank lines are ignored.
pub fn parse_push1(text: &str) -> Result<Push1Instance, ParseError> {
    let rows: Vec<&str> = text
        .trim_end_matches(['\n', '\r', ' '])
        .lines()
        .map(str::trim_end)
        .collect();
    if rows.is_empty() || rows[0].is_empty() {
        return Err(ParseError::new(1, "empty grid"));
    }
    let width = rows[0].len();
    let mut blocks = BTreeSet::new();
    let mut robot: Option<Cell> = None;
    let mut win: Option<Cell> = None;
    for (r, row) in rows.iter().enumerate() {
        let line = r + 1;
        if row.len() != width {
            return Err(ParseError::new(
                line,
                format!("ragged row: {} cells, expected {width}", row.len()),
            ));
        }
        for (c, ch) in row.chars().enumerate() {
            let cell = Cell::new(c, r);
            let (is_robot, is_win, is_block) = match ch {
                '.' => (false, false, false),
                'B' => (false, false, true),
                'R' => (true, false, false),
                'W' => (false, true, false),
                'X' => (true, true, false),
                '*' => (false, true, true),
                other => {
                    return Err(ParseError::new(
                        line,
                        format!("unknown cell `{other}` at column {}", c + 1),
                    ))
                }
            };
            if is_robot && robot.replace(cell).is_some() {
                return Err(ParseError::new(line, "second robot"));
            }
            if is_win && win.replace(cell).is_some() {
                return Err(ParseError::new(line, "second win cell"));
            }
            if is_block {
                blocks.insert(cell);
            }
        }
    }
    let last = rows.len();
    let robot = robot.ok_or_else(|| ParseError::new(last, "no robot `R`"))?;
    let win = win.ok_or_else(|| ParseError::new(last, "no win cell `W`"))?;
    Push1Instance::new(width, rows.len(), blocks, robot, win)
        .map_err(|e| ParseError::new(last, e.to_string()))
}

pub fn write_push1(p: &Push1Instance) -> String {
    let mut out = String::with_capacity((p.width() + 1) * p.height());
    for row in 0..p.height() {
        for col in 0..p.width() {
            let cell = Cell::new(col, row);
            let block = p.blocks().contains(&cell);
            out.push(match (cell == p.robot(), cell == p.win(), block) {
                (true, true, _) => 'X',
                (true, false, _) => 'R',
                (false, true, true) => '*',
                (false, true, false) => 'W',
                (false, false, true) => 'B',
                (false, false, false) => '.',
            });
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grids() {
        let p = parse_push1("RBW\n...\n").unwrap();
        assert_eq!((p.width(), p.height()), (3, 2));
        assert_eq!(p.blocks().len(), 1);
        let x = parse_push1("X.\n").unwrap();
        assert_eq!(x.robot(), x.win());
        assert!(x.blocks().is_empty());
        let star = parse_push1("R*\n").unwrap();
        assert!(star.blocks().contains(&star.win()));
    }

    #[test]
    fn errors() {
        assert_eq!(parse_push1("R.W\n..\n").unwrap_err().line, 2);
        assert_eq!(parse_push1("RRW\n").unwrap_err().message, "second robot");
        assert_eq!(parse_push1("R.W\nW..\n").unwrap_err().line, 2);
        assert!(parse_push1("R..\n").unwrap_err().message.contains("win"));
        assert!(parse_push1("R?W\n").unwrap_err().message.contains('?'));
        assert!(parse_push1("").is_err());
    }

    #[test]
    fn round_trip() {
        for text in ["RBW\n...\n", "X\n", "R*\n.B\n"] {
            assert_eq!(write_push1(&parse_push1(text).unwrap()), text);
        }
    }
}
