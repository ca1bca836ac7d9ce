use rayon::prelude::*;

use crate::bezout::QuadraticMatrixPencil;
use super::integer::{IntegerClassifier, IntegerPencil};
use crate::certify::{PointClass, Stability};
use crate::curve::AffinePencil;
use crate::error::{Error, Result};
use crate::poly::{int, ProblemInstance, Rational};

/// Closed rectangle `[k1min, k1max] x [k2min, k2max]` with rational corners.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridBox {
    pub k1: (Rational, Rational),
    pub k2: (Rational, Rational),
}

impl GridBox {
    pub fn new(k1: (Rational, Rational), k2: (Rational, Rational)) -> Result<Self> {
        if k1.0 >= k1.1 || k2.0 >= k2.1 {
            return Err(Error::InvalidBox(format!(
                "need min < max on both axes, got k1 [{}, {}], k2 [{}, {}]",
                k1.0, k1.1, k2.0, k2.1
            )));
        }
        Ok(GridBox { k1, k2 })
    }

    pub fn from_ints(k1: (i64, i64), k2: (i64, i64)) -> Result<Self> {
        Self::new((int(k1.0), int(k1.1)), (int(k2.0), int(k2.1)))
    }

    pub fn contains(&self, k1: &Rational, k2: &Rational) -> bool {
        (&self.k1.0..=&self.k1.1).contains(&k1) && (&self.k2.0..=&self.k2.1).contains(&k2)
    }
}

/// Per-node label used for components and rasters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CellLabel {
    Stable,
    Unstable,
    Boundary,
}

impl From<Stability> for CellLabel {
    fn from(s: Stability) -> Self {
        match s {
            Stability::Stable => CellLabel::Stable,
            Stability::Unstable => CellLabel::Unstable,
            Stability::Boundary => CellLabel::Boundary,
        }
    }
}

/// Exact classification of every node of a `resolution x resolution` grid.
/// Node `(i, j)` sits at `k1 = k1min + i*dk1`, `k2 = k2min + j*dk2`; nodes
/// are stored row by row in `k2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridScan {
    grid_box: GridBox,
    resolution: usize,
    points: Vec<PointClass>,
}

impl GridScan {
    pub fn grid_box(&self) -> &GridBox {
        &self.grid_box
    }

    pub fn resolution(&self) -> usize {
        self.resolution
    }

    pub fn point(&self, i: usize, j: usize) -> &PointClass {
        &self.points[j * self.resolution + i]
    }

    pub fn label(&self, i: usize, j: usize) -> CellLabel {
        self.point(i, j).stability.into()
    }

    pub fn points(&self) -> &[PointClass] {
        &self.points
    }

    /// Count of nodes per label, in the order stable, unstable, boundary.
    pub fn label_counts(&self) -> (usize, usize, usize) {
        self.points.iter().fold((0, 0, 0), |(s, u, b), p| match p.stability {
            Stability::Stable => (s + 1, u, b),
            Stability::Unstable => (s, u + 1, b),
            Stability::Boundary => (s, u, b + 1),
        })
    }

    /// 4-neighbours inside the grid.
    pub fn neighbors(&self, i: usize, j: usize) -> impl Iterator<Item = (usize, usize)> {
        let n = self.resolution;
        [(-1i64, 0i64), (1, 0), (0, -1), (0, 1)]
            .into_iter()
            .filter_map(move |(di, dj)| {
                let (a, b) = (i as i64 + di, j as i64 + dj);
                (a >= 0 && b >= 0 && (a as usize) < n && (b as usize) < n)
                    .then_some((a as usize, b as usize))
            })
    }

    /// Stable node whose four neighbours all exist and are stable.
    pub fn is_interior_stable(&self, i: usize, j: usize) -> bool {
        let n = self.resolution;
        self.label(i, j) == CellLabel::Stable
            && i > 0
            && j > 0
            && i + 1 < n
            && j + 1 < n
            && self.neighbors(i, j).all(|(a, b)| self.label(a, b) == CellLabel::Stable)
    }

    /// First interior stable node in scan order.
    pub fn first_interior_stable(&self) -> Option<(usize, usize)> {
        let n = self.resolution;
        (0..n)
            .flat_map(|j| (0..n).map(move |i| (i, j)))
            .find(|&(i, j)| self.is_interior_stable(i, j))
    }

    /// Fill in `c_pd` for every node with a (new) certificate pencil.
    pub fn attach_certificate_pencil(&mut self, c: &AffinePencil) {
        let c = IntegerPencil::new(c);
        self.points.par_iter_mut().for_each(|p| {
            p.c_pd = Some(c.is_positive_definite(&p.k1, &p.k2));
        });
    }
}

/// Rational grid coordinate `lo + idx (hi - lo) / (n - 1)`.
pub fn grid_coordinate(range: &(Rational, Rational), idx: usize, n: usize) -> Rational {
    &range.0 + (&range.1 - &range.0) * int(idx as i64) / int(n as i64 - 1)
}

/// Classify every grid node; rows run in parallel on the current rayon pool.
/// Results equal `certify::classify_point` at every node.
pub fn scan_grid(
    inst: &ProblemInstance,
    h: &QuadraticMatrixPencil,
    c: Option<&AffinePencil>,
    grid_box: &GridBox,
    resolution: usize,
) -> Result<GridScan> {
    if resolution < 2 {
        return Err(Error::InvalidResolution(resolution));
    }
    let k1s: Vec<Rational> = (0..resolution)
        .map(|i| grid_coordinate(&grid_box.k1, i, resolution))
        .collect();
    let ic = IntegerClassifier::new(inst, h, c);
    let points: Vec<PointClass> = (0..resolution)
        .into_par_iter()
        .flat_map_iter(|j| {
            let k2 = grid_coordinate(&grid_box.k2, j, resolution);
            k1s.iter()
                .map(|k1| {
                    let (stability, h_pd, c_pd) = ic.classify(k1, &k2);
                    PointClass {
                        k1: k1.clone(),
                        k2: k2.clone(),
                        stability,
                        h_pd,
                        c_pd,
                    }
                })
                .collect::<Vec<_>>()
        })
        .collect();
    Ok(GridScan {
        grid_box: grid_box.clone(),
        resolution,
        points,
    })
}
