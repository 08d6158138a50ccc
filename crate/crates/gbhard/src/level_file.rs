//! Canonical JSON level files.
//!
//! ```json
//! { "format": "gbhard-level/1", "game": "mole_mania", "level": { ... } }
//! ```
//!
//! The `level` body mirrors the level type's fields in declaration order.
//! Cells are `[col, row]`; Donkey Kong tiles and Mole Mania floors are row
//! strings in the render alphabet (`. S T | = #` and `s h`). Weights are
//! written sorted. Equal levels serialize to identical bytes.

use std::collections::BTreeSet;

use gbhard_core::levels::{
    Crop, DkTile, DonkeyKongRoom, Door, DoorState, Floor, Game, HarvestMoonInstance, Level,
    MoleManiaRoom, Polarity, Room, SlideBoard, WarioLevel,
};
use gbhard_core::Cell;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

pub const LEVEL_FORMAT: &str = "gbhard-level/1";

/// Schema violation, located by a field path such as `level.tiles[3]`.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{path}: {message}")]
pub struct LevelFileError {
    pub path: String,
    pub message: String,
}

impl LevelFileError {
    fn new(path: impl Into<String>, message: impl Into<String>) -> Self {
        LevelFileError {
            path: path.into(),
            message: message.into(),
        }
    }
}

type Xy = [usize; 2];

fn xy(c: Cell) -> Xy {
    [c.col, c.row]
}

fn cell([col, row]: Xy) -> Cell {
    Cell::new(col, row)
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
enum PolarityDoc {
    OpenWhenOn,
    OpenWhenOff,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BoardDoc {
    cells: Vec<Xy>,
    switch: usize,
    polarity: PolarityDoc,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DkDoc {
    width: usize,
    height: usize,
    tiles: Vec<String>,
    switches: Vec<Xy>,
    boards: Vec<BoardDoc>,
    start: Xy,
    win: Xy,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RoomDoc {
    treasure: bool,
    key: bool,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
enum DoorStateDoc {
    Open,
    Closed,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DoorDoc {
    from: usize,
    to: usize,
    state: DoorStateDoc,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WarioDoc {
    rooms: Vec<RoomDoc>,
    doors: Vec<DoorDoc>,
    start_room: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CropDoc {
    grow_days: u64,
    sale_price: u64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HarvestDoc {
    num_tiles: u64,
    days: u64,
    target_revenue: u64,
    crops: Vec<CropDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MoleDoc {
    width: usize,
    height: usize,
    floor: Vec<String>,
    weights: Vec<Xy>,
    start: Xy,
    win: Xy,
}

#[derive(Serialize)]
struct Envelope<'a, T> {
    format: &'a str,
    game: &'a str,
    level: T,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEnvelope {
    format: String,
    game: String,
    level: serde_json::Value,
}

fn rows<T: Copy>(grid: &[T], width: usize, symbol: impl Fn(T) -> char) -> Vec<String> {
    if width == 0 {
        return Vec::new();
    }
    grid.chunks(width)
        .map(|r| r.iter().map(|&t| symbol(t)).collect())
        .collect()
}

fn pretty<T: Serialize>(game: Game, body: T) -> String {
    let env = Envelope {
        format: LEVEL_FORMAT,
        game: game.key(),
        level: body,
    };
    let mut s = serde_json::to_string_pretty(&env).expect("level documents always serialize");
    s.push('\n');
    s
}

/// Canonical text of `level`.
pub fn serialize_level(level: &Level) -> String {
    match level {
        Level::DonkeyKong(r) => pretty(
            Game::DonkeyKong,
            DkDoc {
                width: r.width,
                height: r.height,
                tiles: rows(&r.tiles, r.width, DkTile::symbol),
                switches: r.switches.iter().copied().map(xy).collect(),
                boards: r
                    .boards
                    .iter()
                    .map(|b| BoardDoc {
                        cells: b.cells.iter().copied().map(xy).collect(),
                        switch: b.switch,
                        polarity: match b.polarity {
                            Polarity::OpenWhenOn => PolarityDoc::OpenWhenOn,
                            Polarity::OpenWhenOff => PolarityDoc::OpenWhenOff,
                        },
                    })
                    .collect(),
                start: xy(r.start),
                win: xy(r.win),
            },
        ),
        Level::WarioLand(w) => pretty(
            Game::WarioLand,
            WarioDoc {
                rooms: w
                    .rooms
                    .iter()
                    .map(|r| RoomDoc {
                        treasure: r.treasure,
                        key: r.key,
                    })
                    .collect(),
                doors: w
                    .doors
                    .iter()
                    .map(|d| DoorDoc {
                        from: d.from,
                        to: d.to,
                        state: match d.state {
                            DoorState::Open => DoorStateDoc::Open,
                            DoorState::Closed => DoorStateDoc::Closed,
                        },
                    })
                    .collect(),
                start_room: w.start_room,
            },
        ),
        Level::HarvestMoon(h) => pretty(
            Game::HarvestMoon,
            HarvestDoc {
                num_tiles: h.num_tiles,
                days: h.days,
                target_revenue: h.target_revenue,
                crops: h
                    .crops
                    .iter()
                    .map(|c| CropDoc {
                        grow_days: c.grow_days,
                        sale_price: c.sale_price,
                    })
                    .collect(),
            },
        ),
        Level::MoleMania(m) => pretty(
            Game::MoleMania,
            MoleDoc {
                width: m.width,
                height: m.height,
                floor: rows(&m.floor, m.width, Floor::symbol),
                weights: m.weights.iter().copied().map(xy).collect(),
                start: xy(m.start),
                win: xy(m.win),
            },
        ),
    }
}

fn body<T: DeserializeOwned>(value: serde_json::Value) -> Result<T, LevelFileError> {
    serde_path_to_error::deserialize(value).map_err(|e| {
        let path = e.path().to_string();
        let path = if path == "." {
            "level".to_string()
        } else {
            format!("level.{path}")
        };
        LevelFileError::new(path, e.into_inner().to_string())
    })
}

fn grid<T>(
    field: &str,
    rows: &[String],
    width: usize,
    height: usize,
    kind: &str,
    parse: impl Fn(char) -> Option<T>,
) -> Result<Vec<T>, LevelFileError> {
    if rows.len() != height {
        return Err(LevelFileError::new(
            format!("level.{field}"),
            format!("{} rows for height {height}", rows.len()),
        ));
    }
    let mut out = Vec::with_capacity(width * height);
    for (r, row) in rows.iter().enumerate() {
        let path = format!("level.{field}[{r}]");
        if row.chars().count() != width {
            return Err(LevelFileError::new(
                path,
                format!("{} cells for width {width}", row.chars().count()),
            ));
        }
        for (c, ch) in row.chars().enumerate() {
            out.push(parse(ch).ok_or_else(|| {
                LevelFileError::new(&path, format!("unknown {kind} `{ch}` at column {c}"))
            })?);
        }
    }
    Ok(out)
}

/// Parses a level file. Checks the schema only; use `Level::validate` for
/// the game invariants.
pub fn deserialize_level(text: &str) -> Result<Level, LevelFileError> {
    let mut de = serde_json::Deserializer::from_str(text);
    let env: RawEnvelope = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let path = e.path().to_string();
        LevelFileError::new(
            if path == "." { "(root)".into() } else { path },
            e.into_inner().to_string(),
        )
    })?;
    de.end()
        .map_err(|e| LevelFileError::new("(root)", e.to_string()))?;
    if env.format != LEVEL_FORMAT {
        return Err(LevelFileError::new(
            "format",
            format!(
                "unsupported format `{}`, expected `{LEVEL_FORMAT}`",
                env.format
            ),
        ));
    }
    let game = Game::from_key(&env.game)
        .ok_or_else(|| LevelFileError::new("game", format!("unknown game `{}`", env.game)))?;
    Ok(match game {
        Game::DonkeyKong => {
            let d: DkDoc = body(env.level)?;
            let tiles = grid(
                "tiles",
                &d.tiles,
                d.width,
                d.height,
                "tile kind",
                DkTile::from_symbol,
            )?;
            Level::DonkeyKong(DonkeyKongRoom {
                width: d.width,
                height: d.height,
                tiles,
                switches: d.switches.into_iter().map(cell).collect(),
                boards: d
                    .boards
                    .into_iter()
                    .map(|b| SlideBoard {
                        cells: b.cells.into_iter().map(cell).collect(),
                        switch: b.switch,
                        polarity: match b.polarity {
                            PolarityDoc::OpenWhenOn => Polarity::OpenWhenOn,
                            PolarityDoc::OpenWhenOff => Polarity::OpenWhenOff,
                        },
                    })
                    .collect(),
                start: cell(d.start),
                win: cell(d.win),
            })
        }
        Game::WarioLand => {
            let d: WarioDoc = body(env.level)?;
            Level::WarioLand(WarioLevel {
                rooms: d
                    .rooms
                    .into_iter()
                    .map(|r| Room {
                        treasure: r.treasure,
                        key: r.key,
                    })
                    .collect(),
                doors: d
                    .doors
                    .into_iter()
                    .map(|x| Door {
                        from: x.from,
                        to: x.to,
                        state: match x.state {
                            DoorStateDoc::Open => DoorState::Open,
                            DoorStateDoc::Closed => DoorState::Closed,
                        },
                    })
                    .collect(),
                start_room: d.start_room,
            })
        }
        Game::HarvestMoon => {
            let d: HarvestDoc = body(env.level)?;
            Level::HarvestMoon(HarvestMoonInstance {
                num_tiles: d.num_tiles,
                days: d.days,
                target_revenue: d.target_revenue,
                crops: d
                    .crops
                    .into_iter()
                    .map(|c| Crop {
                        grow_days: c.grow_days,
                        sale_price: c.sale_price,
                    })
                    .collect(),
            })
        }
        Game::MoleMania => {
            let d: MoleDoc = body(env.level)?;
            let floor = grid(
                "floor",
                &d.floor,
                d.width,
                d.height,
                "floor kind",
                Floor::from_symbol,
            )?;
            let mut weights = BTreeSet::new();
            for (i, w) in d.weights.iter().enumerate() {
                if !weights.insert(cell(*w)) {
                    return Err(LevelFileError::new(
                        format!("level.weights[{i}]"),
                        format!("duplicate weight at [{},{}]", w[0], w[1]),
                    ));
                }
            }
            Level::MoleMania(MoleManiaRoom {
                width: d.width,
                height: d.height,
                floor,
                weights,
                start: cell(d.start),
                win: cell(d.win),
            })
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mole_text_is_canonical() {
        let mut m = MoleManiaRoom::uniform(3, 1, Floor::Hard, Cell::new(0, 0), Cell::new(2, 0));
        m.weights.insert(Cell::new(1, 0));
        let text = serialize_level(&Level::MoleMania(m.clone()));
        assert!(
            text.starts_with("{\n  \"format\": \"gbhard-level/1\",\n  \"game\": \"mole_mania\",")
        );
        assert!(text.contains("\"hhh\""));
        assert_eq!(deserialize_level(&text).unwrap(), Level::MoleMania(m));
    }

    #[test]
    fn unknown_tile_is_named() {
        let text = r#"{"format":"gbhard-level/1","game":"donkey_kong","level":{"width":2,"height":2,
            "tiles":["..","=Q"],"switches":[],"boards":[],"start":[0,0],"win":[1,0]}}"#;
        let e = deserialize_level(text).unwrap_err();
        assert_eq!(e.path, "level.tiles[1]");
        assert!(e.message.contains("`Q`"), "{e}");
    }

    #[test]
    fn field_paths() {
        let text = r#"{"format":"gbhard-level/1","game":"wario_land","level":{"rooms":[{"treasure":true,"key":1}],"doors":[],"start_room":0}}"#;
        assert_eq!(
            deserialize_level(text).unwrap_err().path,
            "level.rooms[0].key"
        );
        let text = r#"{"format":"gbhard-level/2","game":"wario_land","level":{}}"#;
        assert_eq!(deserialize_level(text).unwrap_err().path, "format");
        let text = r#"{"format":"gbhard-level/1","game":"tetris","level":{}}"#;
        assert_eq!(deserialize_level(text).unwrap_err().path, "game");
        let text = r#"{"format":"gbhard-level/1","game":"harvest_moon","level":{"num_tiles":1,"days":1,"target_revenue":0}}"#;
        let e = deserialize_level(text).unwrap_err();
        assert!(e.message.contains("crops"), "{e}");
    }
}
