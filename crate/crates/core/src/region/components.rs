//! Connected components of the stable grid nodes and convexity probing.

use std::collections::VecDeque;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::scan::{CellLabel, GridScan};
use crate::certify::routh_stable;
use crate::poly::rational::midpoint;
use crate::poly::{ProblemInstance, Rational};

/// One 4-connected set of stable nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub id: usize,
    /// Grid indices `(i, j)` in scan order.
    pub cells: Vec<(usize, usize)>,
    /// Representative node: the first interior one, else the first cell.
    pub sample: (usize, usize),
    /// True when no cell has four stable neighbours.
    pub near_boundary: bool,
}

impl Component {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, cell: (usize, usize)) -> bool {
        self.cells.binary_search_by_key(&(cell.1, cell.0), |&(i, j)| (j, i)).is_ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentSet {
    pub components: Vec<Component>,
}

impl ComponentSet {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Component holding the given node, if it is stable.
    pub fn component_of(&self, cell: (usize, usize)) -> Option<&Component> {
        self.components.iter().find(|c| c.contains(cell))
    }
}

/// Label the stable nodes of `scan` with 4-connectivity (BFS in scan order).
pub fn connected_components(scan: &GridScan) -> ComponentSet {
    let n = scan.resolution();
    let mut label = vec![usize::MAX; n * n];
    let mut components = Vec::new();
    for j in 0..n {
        for i in 0..n {
            if scan.label(i, j) != CellLabel::Stable || label[j * n + i] != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut cells = Vec::new();
            let mut queue = VecDeque::from([(i, j)]);
            label[j * n + i] = id;
            while let Some((a, b)) = queue.pop_front() {
                cells.push((a, b));
                for (x, y) in scan.neighbors(a, b) {
                    if scan.label(x, y) == CellLabel::Stable && label[y * n + x] == usize::MAX {
                        label[y * n + x] = id;
                        queue.push_back((x, y));
                    }
                }
            }
            cells.sort_by_key(|&(a, b)| (b, a));
            let interior = cells.iter().copied().find(|&(a, b)| scan.is_interior_stable(a, b));
            components.push(Component {
                id,
                sample: interior.unwrap_or(cells[0]),
                near_boundary: interior.is_none(),
                cells,
            });
        }
    }
    ComponentSet { components }
}

/// Result of sampling midpoints between stable nodes.
#[allow(clippy::large_enum_variant)]
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConvexityVerdict {
    ConsistentWithConvex { trials: usize },
    Nonconvex {
        a: (Rational, Rational),
        b: (Rational, Rational),
        midpoint: (Rational, Rational),
    },
}

impl ConvexityVerdict {
    pub fn is_convex(&self) -> bool {
        matches!(self, ConvexityVerdict::ConsistentWithConvex { .. })
    }
}

/// Test `trials` random pairs of nodes of `component`: the exact midpoint of
/// each pair must pass the Routh test. Deterministic for a fixed `rng_seed`.
pub fn convexity_probe(
    inst: &ProblemInstance,
    scan: &GridScan,
    component: &Component,
    trials: usize,
    rng_seed: u64,
) -> ConvexityVerdict {
    if component.len() < 2 {
        return ConvexityVerdict::ConsistentWithConvex { trials: 0 };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    for _ in 0..trials {
        let a = component.cells[rng.gen_range(0..component.len())];
        let b = component.cells[rng.gen_range(0..component.len())];
        let (pa, pb) = (scan.point(a.0, a.1), scan.point(b.0, b.1));
        let m = (midpoint(&pa.k1, &pb.k1), midpoint(&pa.k2, &pb.k2));
        let stable = routh_stable(&inst.eval_at(&m.0, &m.1))
            .expect("validated instance is nonconstant")
            .is_stable();
        if !stable {
            return ConvexityVerdict::Nonconvex {
                a: (pa.k1.clone(), pa.k2.clone()),
                b: (pb.k1.clone(), pb.k2.clone()),
                midpoint: m,
            };
        }
    }
    ConvexityVerdict::ConsistentWithConvex { trials }
}
