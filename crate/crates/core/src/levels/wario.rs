use alloc::format;
use alloc::vec::Vec;

use super::Violation;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Room {
    pub treasure: bool,
    pub key: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DoorState {
    Open,
    Closed,
}

/// A one-way skull door from `from` to `to`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Door {
    pub from: usize,
    pub to: usize,
    pub state: DoorState,
}

/// Rooms linked by one-way skull doors. A key opens only closed doors
/// leaving the room it lies in, and is used up doing so.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WarioLevel {
    pub rooms: Vec<Room>,
    pub doors: Vec<Door>,
    pub start_room: usize,
}

impl WarioLevel {
    pub fn num_keys(&self) -> usize {
        self.rooms.iter().filter(|r| r.key).count()
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let n = self.rooms.len();
        if n == 0 {
            out.push(Violation::new("rooms", "level has no rooms"));
        }
        if self.start_room >= n {
            out.push(Violation::new(
                "start_room",
                format!("room {} does not exist ({} rooms)", self.start_room, n),
            ));
        }
        for (i, door) in self.doors.iter().enumerate() {
            for (field, room) in [("from", door.from), ("to", door.to)] {
                if room >= n {
                    out.push(Violation::new(
                        format!("doors[{i}].{field}"),
                        format!("room {room} does not exist ({n} rooms)"),
                    ));
                }
            }
            if door.from == door.to {
                out.push(Violation::new(
                    format!("doors[{i}]"),
                    format!("door loops back into room {}", door.from),
                ));
            }
        }
        out
    }
}
