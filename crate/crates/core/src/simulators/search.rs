use alloc::vec::Vec;
use core::hash::Hash;

use hashbrown::HashMap;

use crate::CapExceeded;

pub(crate) struct Explored<S, A> {
    /// Actions from the start to the first goal state found, if any.
    pub path: Option<Vec<A>>,
    /// Every distinct state discovered, in discovery order.
    pub states: Vec<S>,
}

/// Breadth-first search from `start`. `expand` pushes `(action, successor)`
/// pairs in a fixed order so that results are deterministic.
pub(crate) fn bfs<S, A>(
    start: S,
    max_states: u64,
    what: &'static str,
    is_goal: impl Fn(&S) -> bool,
    mut expand: impl FnMut(&S, &mut Vec<(A, S)>),
) -> Result<Explored<S, A>, CapExceeded>
where
    S: Clone + Eq + Hash,
    A: Copy,
{
    let mut states = Vec::new();
    let mut parent: Vec<Option<(usize, A)>> = Vec::new();
    let mut index = HashMap::new();
    states.push(start.clone());
    parent.push(None);
    index.insert(start, 0usize);
    let mut succ = Vec::new();
    let mut head = 0;
    while head < states.len() {
        if is_goal(&states[head]) {
            let mut path = Vec::new();
            let mut at = head;
            while let Some((p, a)) = parent[at] {
                path.push(a);
                at = p;
            }
            path.reverse();
            return Ok(Explored {
                path: Some(path),
                states,
            });
        }
        succ.clear();
        expand(&states[head], &mut succ);
        for (action, next) in succ.drain(..) {
            if index.contains_key(&next) {
                continue;
            }
            if states.len() as u64 >= max_states {
                return Err(CapExceeded {
                    what,
                    needed: max_states as u128 + 1,
                    cap: max_states as u128,
                });
            }
            index.insert(next.clone(), states.len());
            states.push(next);
            parent.push(Some((head, action)));
        }
        head += 1;
    }
    Ok(Explored { path: None, states })
}
