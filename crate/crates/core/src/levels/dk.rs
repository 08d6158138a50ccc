use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::Violation;
use crate::Cell;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DkTile {
    Empty,
    Switch,
    SlideBoardTop,
    SlideBoardBody,
    BrickFloor,
    Block,
}

impl DkTile {
    pub const ALL: [DkTile; 6] = [
        DkTile::Empty,
        DkTile::Switch,
        DkTile::SlideBoardTop,
        DkTile::SlideBoardBody,
        DkTile::BrickFloor,
        DkTile::Block,
    ];

    /// Character used both in the level schema and in renders.
    pub fn symbol(self) -> char {
        match self {
            DkTile::Empty => '.',
            DkTile::Switch => 'S',
            DkTile::SlideBoardTop => 'T',
            DkTile::SlideBoardBody => '|',
            DkTile::BrickFloor => '=',
            DkTile::Block => '#',
        }
    }

    pub fn from_symbol(c: char) -> Option<DkTile> {
        DkTile::ALL.into_iter().find(|t| t.symbol() == c)
    }

    pub fn is_board(self) -> bool {
        matches!(self, DkTile::SlideBoardTop | DkTile::SlideBoardBody)
    }
}

/// Which switch state retracts a slide board.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Polarity {
    OpenWhenOn,
    OpenWhenOff,
}

impl Polarity {
    pub fn flipped(self) -> Polarity {
        match self {
            Polarity::OpenWhenOn => Polarity::OpenWhenOff,
            Polarity::OpenWhenOff => Polarity::OpenWhenOn,
        }
    }

    /// Whether a board with this polarity is retracted (passable) when its
    /// switch is in state `on`.
    pub fn is_open(self, on: bool) -> bool {
        match self {
            Polarity::OpenWhenOn => on,
            Polarity::OpenWhenOff => !on,
        }
    }
}

/// A vertical run of board cells, topmost first, wired to one switch.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SlideBoard {
    pub cells: Vec<Cell>,
    pub switch: usize,
    pub polarity: Polarity,
}

/// A single Donkey Kong game room. Switches all start Off.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DonkeyKongRoom {
    pub width: usize,
    pub height: usize,
    /// Row-major, `width * height` entries.
    pub tiles: Vec<DkTile>,
    pub switches: Vec<Cell>,
    pub boards: Vec<SlideBoard>,
    pub start: Cell,
    pub win: Cell,
}

impl DonkeyKongRoom {
    /// All-empty room without switches or boards.
    pub fn empty(width: usize, height: usize, start: Cell, win: Cell) -> Self {
        DonkeyKongRoom {
            width,
            height,
            tiles: vec![DkTile::Empty; width * height],
            switches: Vec::new(),
            boards: Vec::new(),
            start,
            win,
        }
    }

    pub fn tile(&self, cell: Cell) -> DkTile {
        self.tiles[cell.index(self.width)]
    }

    pub fn set_tile(&mut self, cell: Cell, tile: DkTile) {
        let i = cell.index(self.width);
        self.tiles[i] = tile;
    }

    pub fn num_cells(&self) -> usize {
        self.width * self.height
    }

    /// Grid-shape problems that make cell lookups unsafe.
    pub(crate) fn structural_violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.width == 0 || self.height == 0 {
            out.push(Violation::new("width/height", "room must be at least 1x1"));
        }
        if self.tiles.len() != self.width * self.height {
            out.push(Violation::new(
                "tiles",
                format!(
                    "expected {} tiles for {}x{}, found {}",
                    self.width * self.height,
                    self.width,
                    self.height,
                    self.tiles.len()
                ),
            ));
        }
        let (w, h) = (self.width, self.height);
        for (name, cell) in [("start", self.start), ("win", self.win)] {
            if !cell.in_bounds(w, h) {
                out.push(Violation::new(name, format!("{cell} is out of bounds")));
            }
        }
        for (i, &cell) in self.switches.iter().enumerate() {
            if !cell.in_bounds(w, h) {
                out.push(Violation::new(
                    format!("switches[{i}]"),
                    format!("{cell} is out of bounds"),
                ));
            }
        }
        for (b, board) in self.boards.iter().enumerate() {
            for (k, &cell) in board.cells.iter().enumerate() {
                if !cell.in_bounds(w, h) {
                    out.push(Violation::new(
                        format!("boards[{b}].cells[{k}]"),
                        format!("{cell} is out of bounds"),
                    ));
                }
            }
        }
        out
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = self.structural_violations();
        if !out.is_empty() {
            return out;
        }
        for (name, cell) in [("start", self.start), ("win", self.win)] {
            if self.tile(cell) != DkTile::Empty {
                out.push(Violation::new(
                    name,
                    format!("{cell} must be an Empty cell, found {:?}", self.tile(cell)),
                ));
            }
            let below = Cell::new(cell.col, cell.row + 1);
            if !below.in_bounds(self.width, self.height) || self.tile(below) != DkTile::BrickFloor {
                out.push(Violation::new(
                    name,
                    format!("{cell} must sit right above a BrickFloor tile"),
                ));
            }
        }
        let mut switch_seen = vec![false; self.num_cells()];
        for (i, &cell) in self.switches.iter().enumerate() {
            if self.tile(cell) != DkTile::Switch {
                out.push(Violation::new(
                    format!("switches[{i}]"),
                    format!("{cell} does not hold a Switch tile"),
                ));
            }
            if core::mem::replace(&mut switch_seen[cell.index(self.width)], true) {
                out.push(Violation::new(
                    format!("switches[{i}]"),
                    format!("{cell} is listed twice"),
                ));
            }
        }
        for (idx, tile) in self.tiles.iter().enumerate() {
            if *tile == DkTile::Switch && !switch_seen[idx] {
                out.push(Violation::new(
                    "tiles",
                    format!(
                        "Switch tile at {} is not wired",
                        Cell::from_index(idx, self.width)
                    ),
                ));
            }
        }
        let mut board_owner: Vec<Option<usize>> = vec![None; self.num_cells()];
        for (b, board) in self.boards.iter().enumerate() {
            let path = format!("boards[{b}]");
            if board.switch >= self.switches.len() {
                out.push(Violation::new(
                    format!("{path}.switch"),
                    format!(
                        "switch index {} but only {} switches",
                        board.switch,
                        self.switches.len()
                    ),
                ));
            }
            let Some(&top) = board.cells.first() else {
                out.push(Violation::new(
                    format!("{path}.cells"),
                    "board has no cells",
                ));
                continue;
            };
            for (k, &cell) in board.cells.iter().enumerate() {
                if cell.col != top.col || cell.row != top.row + k {
                    out.push(Violation::new(
                        format!("{path}.cells[{k}]"),
                        format!("{cell} breaks the vertical run starting at {top}"),
                    ));
                }
                let expected = if k == 0 {
                    DkTile::SlideBoardTop
                } else {
                    DkTile::SlideBoardBody
                };
                if self.tile(cell) != expected {
                    out.push(Violation::new(
                        format!("{path}.cells[{k}]"),
                        format!("{cell} should be {expected:?}, found {:?}", self.tile(cell)),
                    ));
                }
                let owner = &mut board_owner[cell.index(self.width)];
                if let Some(other) = owner {
                    out.push(Violation::new(
                        format!("{path}.cells[{k}]"),
                        format!("{cell} already belongs to boards[{other}]"),
                    ));
                } else {
                    *owner = Some(b);
                }
            }
        }
        for (idx, tile) in self.tiles.iter().enumerate() {
            if tile.is_board() && board_owner[idx].is_none() {
                out.push(Violation::new(
                    "tiles",
                    format!(
                        "board tile at {} belongs to no board",
                        Cell::from_index(idx, self.width)
                    ),
                ));
            }
        }
        out
    }
}
