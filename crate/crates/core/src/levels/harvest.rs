use alloc::format;
use alloc::vec::Vec;

use super::Violation;

/// A single-use crop: occupies a tile for `grow_days`, then sells for
/// `sale_price`. It may be replanted without limit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crop {
    pub grow_days: u64,
    pub sale_price: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HarvestMoonInstance {
    pub num_tiles: u64,
    pub days: u64,
    pub target_revenue: u64,
    pub crops: Vec<Crop>,
}

impl HarvestMoonInstance {
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.num_tiles == 0 {
            out.push(Violation::new("num_tiles", "farm needs at least one tile"));
        }
        for (i, crop) in self.crops.iter().enumerate() {
            if crop.grow_days == 0 {
                out.push(Violation::new(
                    format!("crops[{i}].grow_days"),
                    "a crop must take at least one day to grow",
                ));
            }
        }
        out
    }
}
