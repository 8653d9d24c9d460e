//! The `r`-th edgewise subdivision and its Hilbert-series cross-check.

use std::collections::BTreeSet;
use std::fmt;


use super::complex::{h_from_f, SimplicialComplex, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::polyseries::IntPolynomial;
use crate::report::{Check, Report};
use crate::veronese::veronese_numerator;

/// A point of `{a in N^n : a_1 + ... + a_n = r}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridPoint {
    coords: Vec<u32>,
}

impl GridPoint {
    pub fn new(coords: Vec<u32>) -> Self {
        GridPoint { coords }
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn level(&self) -> u64 {
        self.coords.iter().map(|&c| c as u64).sum()
    }

    /// 1-based positions of the nonzero coordinates.
    pub fn support(&self) -> Vec<u32> {
        (1..)
            .zip(&self.coords)
            .filter(|(_, &c)| c > 0)
            .map(|(i, _)| i)
            .collect()
    }
}

impl fmt::Display for GridPoint {
    /// Colon-separated coordinates, e.g. `2:0:1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(":"))
    }
}

/// Partial sums: coordinate `m` of the image is `a_1 + ... + a_m`.
pub fn phi(a: &[i64]) -> Vec<i64> {
    a.iter()
        .scan(0i64, |acc, &x| {
            *acc += x;
            Some(*acc)
        })
        .collect()
}

/// `φ(a - b)` or `φ(b - a)` lies in `{0,1}^n`.
fn compatible(a: &GridPoint, b: &GridPoint) -> bool {
    let diff: Vec<i64> = a
        .coords
        .iter()
        .zip(&b.coords)
        .map(|(&x, &y)| x as i64 - y as i64)
        .collect();
    let p = phi(&diff);
    p.iter().all(|&x| x == 0 || x == 1) || p.iter().all(|&x| x == 0 || x == -1)
}

/// The subdivided complex together with its ground set: vertex `i` of
/// `complex` is `points[i - 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgewiseSubdivision {
    pub points: Vec<GridPoint>,
    pub complex: SimplicialComplex,
}

impl EdgewiseSubdivision {
    /// Facets with each vertex written as its grid point.
    pub fn facet_points(&self) -> Vec<Vec<&GridPoint>> {
        self.complex
            .facets()
            .map(|f| f.iter().map(|&v| &self.points[v as usize - 1]).collect())
            .collect()
    }
}

/// Compositions of `r` into `parts` nonnegative summands.
fn compositions(r: u32, parts: usize, out: &mut Vec<Vec<u32>>, prefix: &mut Vec<u32>) {
    if prefix.len() + 1 == parts {
        prefix.push(r);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    for x in (0..=r).rev() {
        prefix.push(x);
        compositions(r - x, parts, out, prefix);
        prefix.pop();
    }
}

/// Maximal cliques by Bron–Kerbosch with pivoting.
fn maximal_cliques(adj: &[Vec<bool>], out: &mut Vec<Vec<usize>>, budget: usize) -> Result<()> {
    fn go(
        adj: &[Vec<bool>],
        r: &mut Vec<usize>,
        p: Vec<usize>,
        x: Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        budget: usize,
    ) -> Result<()> {
        if p.is_empty() && x.is_empty() {
            if out.len() >= budget {
                return Err(Error::BudgetExceeded { budget });
            }
            out.push(r.clone());
            return Ok(());
        }
        let pivot = *p
            .iter()
            .chain(&x)
            .max_by_key(|&&u| p.iter().filter(|&&v| adj[u][v]).count())
            .expect("p or x nonempty");
        let candidates: Vec<usize> = p.iter().copied().filter(|&v| !adj[pivot][v]).collect();
        let (mut p, mut x) = (p, x);
        for v in candidates {
            r.push(v);
            let np = p.iter().copied().filter(|&u| adj[v][u]).collect();
            let nx = x.iter().copied().filter(|&u| adj[v][u]).collect();
            go(adj, r, np, nx, out, budget)?;
            r.pop();
            p.retain(|&u| u != v);
            x.push(v);
        }
        Ok(())
    }
    go(adj, &mut Vec::new(), (0..adj.len()).collect(), Vec::new(), out, budget)
}

pub fn edgewise(delta: &SimplicialComplex, r: usize) -> Result<EdgewiseSubdivision> {
    edgewise_with_budget(delta, r, DEFAULT_BUDGET)
}

/// The `r`-th edgewise subdivision. Vertices of `delta` are identified with
/// coordinates `1..=n` in increasing label order. A set of grid points is a
/// face when the union of supports is a face of `delta` and every pair is
/// compatible under `φ`; facets are the maximal cliques of the compatibility
/// graph on the points supported in each facet of `delta`.
pub fn edgewise_with_budget(
    delta: &SimplicialComplex,
    r: usize,
    budget: usize,
) -> Result<EdgewiseSubdivision> {
    if r == 0 {
        return Err(Error::domain("edgewise subdivision needs r >= 1"));
    }
    let r = u32::try_from(r).map_err(|_| Error::domain("r is too large"))?;
    let vertices = delta.vertices();
    let n = vertices.len();
    let position = |v: u32| vertices.binary_search(&v).expect("vertex of delta");

    let mut points = BTreeSet::new();
    let mut local: Vec<Vec<Vec<u32>>> = Vec::new();
    for facet in delta.facets() {
        let mut comps = Vec::new();
        if !facet.is_empty() {
            compositions(r, facet.len(), &mut comps, &mut Vec::new());
        }
        let mut here = Vec::with_capacity(comps.len());
        for comp in comps {
            let mut coords = vec![0u32; n];
            for (&v, c) in facet.iter().zip(comp) {
                coords[position(v)] = c;
            }
            points.insert(coords.clone());
            here.push(coords);
            if points.len() > budget {
                return Err(Error::BudgetExceeded { budget });
            }
        }
        local.push(here);
    }
    // Lexicographically largest first, so `r e_1` is vertex 1.
    let points: Vec<GridPoint> = points.into_iter().rev().map(GridPoint::new).collect();
    let label = |coords: &Vec<u32>| {
        1 + points
            .binary_search_by(|p| coords.cmp(&p.coords))
            .expect("collected point")
    };

    let mut cliques = Vec::new();
    for here in &local {
        let grid: Vec<GridPoint> = here.iter().cloned().map(GridPoint::new).collect();
        let adj: Vec<Vec<bool>> = grid
            .iter()
            .map(|a| grid.iter().map(|b| a != b && compatible(a, b)).collect())
            .collect();
        let mut found = Vec::new();
        maximal_cliques(&adj, &mut found, budget)?;
        for clique in found {
            cliques.push(clique.iter().map(|&i| label(&here[i]) as u32).collect::<Vec<_>>());
        }
        if cliques.len() > budget {
            return Err(Error::BudgetExceeded { budget });
        }
    }
    Ok(EdgewiseSubdivision {
        complex: SimplicialComplex::from_facets(cliques),
        points,
    })
}

/// Both sides of the Hilbert-series identity between the edgewise
/// subdivision and the Veronese transform of `delta`'s h-vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgewiseHilbert {
    pub d: usize,
    pub r: usize,
    pub h_edgewise: IntPolynomial,
    pub h_veronese: IntPolynomial,
}

impl EdgewiseHilbert {
    pub fn pass(&self) -> bool {
        self.h_edgewise == self.h_veronese
    }

    /// A one-check report that always carries both h-vectors.
    pub fn report(&self) -> Report {
        let params = [("d", self.d as i64), ("r", self.r as i64)];
        let mut check = Check::failed(
            "edgewise.hilbert",
            &params,
            vec![
                ("h_edgewise", self.h_edgewise.to_string()),
                ("h_veronese", self.h_veronese.to_string()),
            ],
        );
        check.pass = self.pass();
        let mut report = Report::new("edgewise").with_grid(&params);
        report.push(check);
        report
    }
}

pub fn check_edgewise_hilbert(delta: &SimplicialComplex, r: usize) -> Result<EdgewiseHilbert> {
    if delta.dim() < 0 {
        return Err(Error::domain("the complex {∅} has no h-vector to compare"));
    }
    let d = delta.dim() as usize + 1;
    let sub = edgewise(delta, r)?;
    let h_edgewise = h_from_f(&sub.complex.f_vector()?, d)?;
    let h = h_from_f(&delta.f_vector()?, d)?;
    let h_veronese = veronese_numerator(&h, d, r)?;
    Ok(EdgewiseHilbert {
        d,
        r,
        h_edgewise,
        h_veronese,
    })
}
