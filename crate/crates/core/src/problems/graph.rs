use alloc::vec;
use alloc::vec::Vec;

use super::ProblemError;
use crate::CapExceeded;

/// Directed multigraph on vertices `0..num_vertices`. Parallel edges are
/// allowed, self-loops are not.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DirectedGraph {
    num_vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl DirectedGraph {
    pub fn new(num_vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self, ProblemError> {
        for (ei, &(s, t)) in edges.iter().enumerate() {
            for vertex in [s, t] {
                if vertex >= num_vertices {
                    return Err(ProblemError::VertexOutOfRange {
                        edge: ei,
                        vertex,
                        num_vertices,
                    });
                }
            }
            if s == t {
                return Err(ProblemError::SelfLoop {
                    edge: ei,
                    vertex: s,
                });
            }
        }
        Ok(DirectedGraph {
            num_vertices,
            edges,
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.num_vertices];
        for &(_, t) in &self.edges {
            deg[t] += 1;
        }
        deg
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.num_vertices];
        for &(s, _) in &self.edges {
            deg[s] += 1;
        }
        deg
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeViolation {
    pub vertex: usize,
    pub in_degree: usize,
    pub out_degree: usize,
}

/// Degree classification of a graph against the skull-door profile:
/// every vertex must be (in 1, out 2) or (in 2, out 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkullDoorReport {
    pub is_valid: bool,
    /// Vertices with in-degree 1 and out-degree 2.
    pub alpha: usize,
    /// Vertices with in-degree 2 and out-degree 1.
    pub beta: usize,
    pub violations: Vec<DegreeViolation>,
}

pub fn validate_skull_door_graph(g: &DirectedGraph) -> SkullDoorReport {
    let ins = g.in_degrees();
    let outs = g.out_degrees();
    let mut report = SkullDoorReport {
        is_valid: true,
        alpha: 0,
        beta: 0,
        violations: Vec::new(),
    };
    for (vertex, (&i, &o)) in ins.iter().zip(&outs).enumerate() {
        match (i, o) {
            (1, 2) => report.alpha += 1,
            (2, 1) => report.beta += 1,
            _ => report.violations.push(DegreeViolation {
                vertex,
                in_degree: i,
                out_degree: o,
            }),
        }
    }
    report.is_valid = report.violations.is_empty();
    report
}

/// Lowest-numbered vertex with in-degree 2 and out-degree 1.
///
/// Every non-empty skull-door graph has one: counting edge endpoints gives
/// `alpha + 2 beta = 2 alpha + beta`, so `alpha == beta`, and both are
/// positive once there is any vertex at all.
pub fn find_pivot_vertex(g: &DirectedGraph) -> Result<usize, ProblemError> {
    if g.num_vertices() == 0 {
        return Err(ProblemError::EmptyGraph);
    }
    let report = validate_skull_door_graph(g);
    if !report.is_valid {
        return Err(ProblemError::NotSkullDoorGraph {
            violations: report.violations.len(),
        });
    }
    let ins = g.in_degrees();
    let outs = g.out_degrees();
    Ok((0..g.num_vertices())
        .find(|&v| ins[v] == 2 && outs[v] == 1)
        .expect("valid non-empty skull-door graph has a (2,1) vertex"))
}

/// Backtracking Hamiltonian-cycle search anchored at vertex 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HamCycleOracle {
    pub max_vertices: usize,
}

impl Default for HamCycleOracle {
    fn default() -> Self {
        HamCycleOracle { max_vertices: 12 }
    }
}

impl HamCycleOracle {
    /// A Hamiltonian cycle as a vertex order starting at 0 (the closing
    /// edge back to 0 is implied), or `None`.
    pub fn find_cycle(&self, g: &DirectedGraph) -> Result<Option<Vec<usize>>, CapExceeded> {
        let n = g.num_vertices();
        if n > self.max_vertices {
            return Err(CapExceeded {
                what: "hamiltonian cycle oracle vertices",
                needed: n as u128,
                cap: self.max_vertices as u128,
            });
        }
        if n < 2 {
            return Ok(None);
        }
        let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(s, t) in g.edges() {
            if !succ[s].contains(&t) {
                succ[s].push(t);
            }
        }
        for list in &mut succ {
            list.sort_unstable();
        }
        let mut path = vec![0];
        let mut on_path = vec![false; n];
        on_path[0] = true;
        if extend(&succ, &mut path, &mut on_path) {
            Ok(Some(path))
        } else {
            Ok(None)
        }
    }

    pub fn decide(&self, g: &DirectedGraph) -> Result<bool, CapExceeded> {
        Ok(self.find_cycle(g)?.is_some())
    }
}

fn extend(succ: &[Vec<usize>], path: &mut Vec<usize>, on_path: &mut [bool]) -> bool {
    let last = *path.last().unwrap();
    if path.len() == succ.len() {
        return succ[last].contains(&0);
    }
    for &next in &succ[last] {
        if on_path[next] {
            continue;
        }
        on_path[next] = true;
        path.push(next);
        if extend(succ, path, on_path) {
            return true;
        }
        path.pop();
        on_path[next] = false;
    }
    false
}

/// [`HamCycleOracle::decide`] with the default vertex cap.
pub fn ham_cycle_oracle(g: &DirectedGraph) -> Result<bool, CapExceeded> {
    HamCycleOracle::default().decide(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_vertex() -> DirectedGraph {
        DirectedGraph::new(2, vec![(0, 1), (0, 1), (1, 0)]).unwrap()
    }

    fn triangle() -> DirectedGraph {
        DirectedGraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn two_vertex_multigraph_is_valid() {
        let r = validate_skull_door_graph(&two_vertex());
        assert!(r.is_valid);
        assert_eq!((r.alpha, r.beta), (1, 1));
        assert_eq!(find_pivot_vertex(&two_vertex()), Ok(1));
    }

    #[test]
    fn triangle_is_rejected() {
        let r = validate_skull_door_graph(&triangle());
        assert!(!r.is_valid);
        assert_eq!(r.violations.len(), 3);
        assert!(r
            .violations
            .iter()
            .all(|v| v.in_degree == 1 && v.out_degree == 1));
        assert!(matches!(
            find_pivot_vertex(&triangle()),
            Err(ProblemError::NotSkullDoorGraph { violations: 3 })
        ));
    }

    #[test]
    fn empty_graph_is_vacuously_valid_but_has_no_pivot() {
        let g = DirectedGraph::new(0, vec![]).unwrap();
        let r = validate_skull_door_graph(&g);
        assert!(r.is_valid);
        assert_eq!((r.alpha, r.beta), (0, 0));
        assert_eq!(find_pivot_vertex(&g), Err(ProblemError::EmptyGraph));
    }

    #[test]
    fn pivot_tie_break_is_smallest_id() {
        // 0,1: (1 in, 2 out); 2,3: (2 in, 1 out)
        let g =
            DirectedGraph::new(4, vec![(0, 2), (0, 3), (1, 2), (1, 3), (2, 0), (3, 1)]).unwrap();
        assert!(validate_skull_door_graph(&g).is_valid);
        assert_eq!(find_pivot_vertex(&g), Ok(2));
    }

    #[test]
    fn rejects_self_loops_and_bad_ids() {
        assert_eq!(
            DirectedGraph::new(1, vec![(0, 0)]),
            Err(ProblemError::SelfLoop { edge: 0, vertex: 0 })
        );
        assert!(matches!(
            DirectedGraph::new(2, vec![(0, 2)]),
            Err(ProblemError::VertexOutOfRange { vertex: 2, .. })
        ));
    }

    #[test]
    fn ham_cycle_small_cases() {
        assert_eq!(ham_cycle_oracle(&triangle()), Ok(true));
        assert_eq!(ham_cycle_oracle(&two_vertex()), Ok(true));
        let one_way = DirectedGraph::new(2, vec![(0, 1)]).unwrap();
        assert_eq!(ham_cycle_oracle(&one_way), Ok(false));
        let single = DirectedGraph::new(1, vec![]).unwrap();
        assert_eq!(ham_cycle_oracle(&single), Ok(false));
    }

    #[test]
    fn ham_cycle_refuses_above_cap() {
        let g = DirectedGraph::new(13, vec![]).unwrap();
        assert!(ham_cycle_oracle(&g).is_err());
    }

    #[test]
    fn ham_cycle_witness_is_a_cycle() {
        let g = DirectedGraph::new(4, vec![(0, 2), (2, 1), (1, 3), (3, 0), (0, 1)]).unwrap();
        let cycle = HamCycleOracle::default().find_cycle(&g).unwrap().unwrap();
        assert_eq!(cycle, vec![0, 2, 1, 3]);
    }
}
