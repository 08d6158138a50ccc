use alloc::vec;
use alloc::vec::Vec;

use super::ProblemError;
use crate::CapExceeded;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Item {
    pub weight: u64,
    pub value: u64,
}

/// Unbounded knapsack decision instance: is there a multiset of items with
/// total weight at most `capacity` and total value at least `target`?
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KnapsackInstance {
    capacity: u64,
    target: u64,
    items: Vec<Item>,
}

impl KnapsackInstance {
    pub fn new(capacity: u64, target: u64, items: Vec<Item>) -> Result<Self, ProblemError> {
        if let Some(item) = items.iter().position(|it| it.weight == 0) {
            return Err(ProblemError::ZeroWeight { item });
        }
        Ok(KnapsackInstance {
            capacity,
            target,
            items,
        })
    }

    pub fn capacity(&self) -> u64 {
        self.capacity
    }

    pub fn target(&self) -> u64 {
        self.target
    }

    pub fn items(&self) -> &[Item] {
        &self.items
    }
}

/// Dynamic program over capacities `0..=W`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KnapsackOracle {
    pub max_capacity: u64,
}

impl Default for KnapsackOracle {
    fn default() -> Self {
        KnapsackOracle {
            max_capacity: 1_000_000,
        }
    }
}

impl KnapsackOracle {
    /// Largest total value reachable within the capacity.
    pub fn max_value(&self, k: &KnapsackInstance) -> Result<u64, CapExceeded> {
        if k.capacity > self.max_capacity {
            return Err(CapExceeded {
                what: "knapsack oracle capacity",
                needed: k.capacity as u128,
                cap: self.max_capacity as u128,
            });
        }
        let cap = k.capacity as usize;
        let mut best: Vec<u64> = vec![0; cap + 1];
        for c in 1..=cap {
            for item in &k.items {
                let w = item.weight as usize;
                if w <= c {
                    best[c] = best[c].max(best[c - w].saturating_add(item.value));
                }
            }
        }
        Ok(best[cap])
    }

    pub fn decide(&self, k: &KnapsackInstance) -> Result<bool, CapExceeded> {
        Ok(self.max_value(k)? >= k.target)
    }
}

/// [`KnapsackOracle::decide`] with the default capacity cap.
pub fn knapsack_oracle(k: &KnapsackInstance) -> Result<bool, CapExceeded> {
    KnapsackOracle::default().decide(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn items() -> Vec<Item> {
        vec![
            Item {
                weight: 6,
                value: 8,
            },
            Item {
                weight: 5,
                value: 5,
            },
        ]
    }

    /// Enumerates every multiset (count vector) with total weight <= W.
    fn brute_max(capacity: u64, items: &[Item]) -> u64 {
        fn go(capacity: u64, items: &[Item]) -> u64 {
            match items.split_first() {
                None => 0,
                Some((first, rest)) => (0..=capacity / first.weight)
                    .map(|n| n * first.value + go(capacity - n * first.weight, rest))
                    .max()
                    .unwrap(),
            }
        }
        go(capacity, items)
    }

    #[test]
    fn worked_example_matches_enumeration() {
        // Multisets within weight 10: {}, {6}, {5}, {5,5} → best value 10.
        assert_eq!(brute_max(10, &items()), 10);
        let yes = KnapsackInstance::new(10, 10, items()).unwrap();
        let no = KnapsackInstance::new(10, 11, items()).unwrap();
        assert_eq!(knapsack_oracle(&yes), Ok(true));
        assert_eq!(knapsack_oracle(&no), Ok(false));
    }

    #[test]
    fn zero_capacity() {
        let k0 = KnapsackInstance::new(0, 0, items()).unwrap();
        let k1 = KnapsackInstance::new(0, 1, items()).unwrap();
        assert_eq!(knapsack_oracle(&k0), Ok(true));
        assert_eq!(knapsack_oracle(&k1), Ok(false));
    }

    #[test]
    fn rejects_zero_weight_and_large_capacity() {
        assert_eq!(
            KnapsackInstance::new(
                3,
                1,
                vec![Item {
                    weight: 0,
                    value: 1
                }]
            ),
            Err(ProblemError::ZeroWeight { item: 0 })
        );
        let big = KnapsackInstance::new(2_000_000, 0, vec![]).unwrap();
        assert!(knapsack_oracle(&big).is_err());
    }

    #[test]
    fn dp_agrees_with_enumeration_on_small_grid() {
        for capacity in 0..=14 {
            let its = vec![
                Item {
                    weight: 3,
                    value: 4,
                },
                Item {
                    weight: 4,
                    value: 5,
                },
                Item {
                    weight: 7,
                    value: 11,
                },
            ];
            let k = KnapsackInstance::new(capacity, 0, its.clone()).unwrap();
            assert_eq!(
                KnapsackOracle::default().max_value(&k),
                Ok(brute_max(capacity, &its))
            );
        }
    }
}
