use crate::levels::{Crop, HarvestMoonInstance};
use crate::problems::KnapsackInstance;

/// One farm tile, `W` days, target revenue `V`, and one replantable crop
/// per item with `grow_days = w_i` and `sale_price = v_i`.
pub fn reduce_knapsack_to_harvest(k: &KnapsackInstance) -> HarvestMoonInstance {
    HarvestMoonInstance {
        num_tiles: 1,
        days: k.capacity(),
        target_revenue: k.target(),
        crops: k
            .items()
            .iter()
            .map(|it| Crop {
                grow_days: it.weight,
                sale_price: it.value,
            })
            .collect(),
    }
}
