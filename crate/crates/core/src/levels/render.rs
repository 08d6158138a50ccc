use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use super::{
    DonkeyKongRoom, DoorState, Floor, HarvestMoonInstance, Level, MoleManiaRoom, Polarity,
    Violation, WarioLevel,
};

pub const DK_LEGEND: &str =
    "legend: M start  * win  X start+win  S switch  T board top  | board body  = brick floor  # block  . empty";
pub const MOLE_LEGEND: &str =
    "legend: M start  * win  X start+win  # weight  . hard floor  ~ soft floor";

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("level cannot be rendered: {}", .0.first().map(|v| alloc::format!("{v}")).unwrap_or_default())]
pub struct RenderError(pub Vec<Violation>);

/// Renders a level as text: grid games get one line per row followed by a
/// legend footer; room-graph and schedule games get a listing.
///
/// Only the grid shape has to be sound. Invariant violations such as a
/// floating start cell still render.
pub fn render_ascii(level: &Level) -> Result<String, RenderError> {
    match level {
        Level::DonkeyKong(room) => render_dk(room),
        Level::WarioLand(l) => Ok(render_wario(l)),
        Level::HarvestMoon(h) => Ok(render_harvest(h)),
        Level::MoleMania(room) => render_mole(room),
    }
}

fn marker(cell: crate::Cell, start: crate::Cell, win: crate::Cell) -> Option<char> {
    match (cell == start, cell == win) {
        (true, true) => Some('X'),
        (true, false) => Some('M'),
        (false, true) => Some('*'),
        _ => None,
    }
}

fn render_dk(room: &DonkeyKongRoom) -> Result<String, RenderError> {
    let problems = room.structural_violations();
    if !problems.is_empty() {
        return Err(RenderError(problems));
    }
    let mut out = String::new();
    for row in 0..room.height {
        for col in 0..room.width {
            let cell = crate::Cell::new(col, row);
            let c = marker(cell, room.start, room.win).unwrap_or_else(|| room.tile(cell).symbol());
            out.push(c);
        }
        out.push('\n');
    }
    out.push_str(DK_LEGEND);
    out.push('\n');
    for (i, cell) in room.switches.iter().enumerate() {
        let _ = writeln!(out, "switch {i}: {cell}");
    }
    for (i, board) in room.boards.iter().enumerate() {
        let when = match board.polarity {
            Polarity::OpenWhenOn => "on",
            Polarity::OpenWhenOff => "off",
        };
        let _ = write!(out, "board {i}: {} cells", board.cells.len());
        if let Some(top) = board.cells.first() {
            let _ = write!(out, " from {top}");
        }
        let _ = writeln!(out, ", open when switch {} is {when}", board.switch);
    }
    Ok(out)
}

fn render_mole(room: &MoleManiaRoom) -> Result<String, RenderError> {
    let problems = room.structural_violations();
    if !problems.is_empty() {
        return Err(RenderError(problems));
    }
    let mut out = String::new();
    for row in 0..room.height {
        for col in 0..room.width {
            let cell = crate::Cell::new(col, row);
            let c = if room.weights.contains(&cell) {
                '#'
            } else if let Some(m) = marker(cell, room.start, room.win) {
                m
            } else {
                match room.floor_at(cell) {
                    Floor::Hard => '.',
                    Floor::Soft => '~',
                }
            };
            out.push(c);
        }
        out.push('\n');
    }
    out.push_str(MOLE_LEGEND);
    out.push('\n');
    Ok(out)
}

fn render_wario(level: &WarioLevel) -> String {
    let mut out = String::new();
    for (i, room) in level.rooms.iter().enumerate() {
        let _ = writeln!(
            out,
            "room {i}:{}{}{}",
            if room.treasure { " treasure" } else { "" },
            if room.key { " key" } else { "" },
            if i == level.start_room {
                " (start)"
            } else {
                ""
            },
        );
    }
    for (i, door) in level.doors.iter().enumerate() {
        let state = match door.state {
            DoorState::Open => "open",
            DoorState::Closed => "closed",
        };
        let _ = writeln!(out, "door {i}: {} -> {} {state}", door.from, door.to);
    }
    out
}

fn render_harvest(h: &HarvestMoonInstance) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "tiles: {}  days: {}  target revenue: {}",
        h.num_tiles, h.days, h.target_revenue
    );
    for (i, crop) in h.crops.iter().enumerate() {
        let _ = writeln!(
            out,
            "crop {i}: grows {} days, sells for {}",
            crop.grow_days, crop.sale_price
        );
    }
    out
}
