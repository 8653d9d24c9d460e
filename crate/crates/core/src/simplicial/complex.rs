use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::polyseries::{binomial, join_ints, IntPolynomial};

/// Default cap on the number of faces any enumeration may produce.
pub const DEFAULT_BUDGET: usize = 10_000_000;

/// A finite simplicial complex given by its facets.
///
/// Facets are stored flat (labels plus offsets); every facet is sorted and
/// no facet contains another. The complex `{∅}` has one empty facet.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    labels: Vec<u32>,
    offsets: Vec<usize>,
}

impl SimplicialComplex {
    /// Normalizes arbitrary faces into facets: sorts and deduplicates
    /// labels, drops faces contained in others, orders facets
    /// lexicographically. No input faces gives `{∅}`.
    pub fn from_facets<I, F>(faces: I) -> Self
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = u32>,
    {
        let mut faces: Vec<Vec<u32>> = faces
            .into_iter()
            .map(|f| {
                let mut f: Vec<u32> = f.into_iter().collect();
                f.sort_unstable();
                f.dedup();
                f
            })
            .collect();
        faces.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        faces.dedup();
        let mut kept: Vec<Vec<u32>> = Vec::new();
        for face in faces {
            if !kept.iter().any(|big| is_subset(&face, big)) {
                kept.push(face);
            }
        }
        if kept.is_empty() {
            kept.push(Vec::new());
        }
        kept.sort();
        Self::from_sorted_antichain(kept.iter().map(Vec::as_slice))
    }

    /// Trusts that the input is a nonempty antichain of sorted faces.
    pub(crate) fn from_sorted_antichain<'a>(facets: impl Iterator<Item = &'a [u32]>) -> Self {
        let mut builder = FacetBuilder::default();
        for f in facets {
            builder.push(f);
        }
        builder.finish()
    }

    /// `{∅}`.
    pub fn empty() -> Self {
        SimplicialComplex {
            labels: Vec::new(),
            offsets: vec![0, 0],
        }
    }

    /// The full simplex on the given vertices.
    pub fn simplex(vertices: impl IntoIterator<Item = u32>) -> Self {
        Self::from_facets([vertices.into_iter().collect::<Vec<_>>()])
    }

    pub fn facet_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn facet(&self, i: usize) -> &[u32] {
        &self.labels[self.offsets[i]..self.offsets[i + 1]]
    }

    pub fn facets(&self) -> impl Iterator<Item = &[u32]> + '_ {
        (0..self.facet_count()).map(|i| self.facet(i))
    }

    /// Sorted distinct vertex labels.
    pub fn vertices(&self) -> Vec<u32> {
        let mut v = self.labels.clone();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// `max |F| - 1`; `-1` for `{∅}`.
    pub fn dim(&self) -> isize {
        self.facets().map(|f| f.len() as isize).max().unwrap_or(0) - 1
    }

    pub fn contains_face(&self, face: &[u32]) -> bool {
        let mut sorted = face.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        self.facets().any(|f| is_subset(&sorted, f))
    }

    pub fn f_vector(&self) -> Result<FVector> {
        self.f_vector_with_budget(DEFAULT_BUDGET)
    }

    /// Face counts by dimension. Faces of size `s` are the size-`s` facets
    /// together with the shadow of the size-`s + 1` faces, deduplicated one
    /// level at a time.
    pub fn f_vector_with_budget(&self, budget: usize) -> Result<FVector> {
        let top = self.facets().map(<[u32]>::len).max().unwrap_or(0);
        let max_label = self.labels.iter().copied().max().unwrap_or(0);
        let width = (u32::BITS - max_label.leading_zeros()).max(1);
        let narrow = |size: usize| size as u32 * width <= u64::BITS;
        let mut by_size: Vec<Vec<&[u32]>> = vec![Vec::new(); top + 1];
        let mut per_size = vec![0usize; top + 1];
        for f in self.facets() {
            per_size[f.len()] += 1;
        }
        let mut packed_by_size: Vec<Vec<u64>> = per_size
            .iter()
            .enumerate()
            .map(|(size, &n)| Vec::with_capacity(if narrow(size) { n } else { 0 }))
            .collect();
        for f in self.facets() {
            if narrow(f.len()) {
                packed_by_size[f.len()].push(u64::pack(f, width));
            } else {
                by_size[f.len()].push(f);
            }
        }
        let mut counts = vec![0usize; top + 1];
        counts[0] = 1;
        let mut total = 1usize;
        let mut above: Option<Level> = None;
        for size in (1..=top).rev() {
            let own = if narrow(size) {
                Own::Packed(std::mem::take(&mut packed_by_size[size]))
            } else {
                Own::Faces(&by_size[size])
            };
            let level = Level::build(size, width, own, above.as_ref());
            counts[size] = level.len();
            total += level.len();
            if total > budget {
                return Err(Error::BudgetExceeded { budget });
            }
            above = Some(level);
        }
        Ok(FVector {
            entries: counts.into_iter().map(BigInt::from).collect(),
        })
    }
}

impl fmt::Display for SimplicialComplex {
    /// One facet per line, labels separated by single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for facet in self.facets().filter(|x| !x.is_empty()) {
            let line: Vec<String> = facet.iter().map(u32::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Default)]
pub(crate) struct FacetBuilder {
    labels: Vec<u32>,
    offsets: Vec<usize>,
}

impl FacetBuilder {
    pub(crate) fn with_capacity(facets: usize, labels: usize) -> Self {
        let mut offsets = Vec::with_capacity(facets + 1);
        offsets.push(0);
        FacetBuilder {
            labels: Vec::with_capacity(labels),
            offsets,
        }
    }

    pub(crate) fn push(&mut self, facet: &[u32]) {
        if self.offsets.is_empty() {
            self.offsets.push(0);
        }
        self.labels.extend_from_slice(facet);
        self.offsets.push(self.labels.len());
    }

    pub(crate) fn finish(self) -> SimplicialComplex {
        if self.offsets.len() < 2 {
            return SimplicialComplex::empty();
        }
        SimplicialComplex {
            labels: self.labels,
            offsets: self.offsets,
        }
    }
}

fn is_subset(small: &[u32], big: &[u32]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.any(|y| y == x))
}

/// Packed face keys: sorted labels of a fixed bit width with the largest
/// label most significant, so numeric order is squashed (colex) order.
trait Key: Copy + Ord {
    fn pack(face: &[u32], width: u32) -> Self;
    fn label(self, width: u32, pos: usize) -> u32;
}

macro_rules! impl_key {
    ($t:ty) => {
        impl Key for $t {
            fn pack(face: &[u32], width: u32) -> Self {
                face.iter().rev().fold(0, |acc, &x| (acc << width) | x as $t)
            }
            fn label(self, width: u32, pos: usize) -> u32 {
                let mask: $t = (1 << width) - 1;
                ((self >> (width as usize * pos)) & mask) as u32
            }
        }
    };
}
impl_key!(u64);
impl_key!(u128);

/// Faces of one size, sorted and deduplicated.
enum Level {
    Narrow(Packed<u64>),
    Medium(Packed<u128>),
    Wide(Vec<Vec<u32>>),
}

struct Packed<K> {
    size: usize,
    width: u32,
    keys: Vec<K>,
}

impl<K: Key> Packed<K> {
    fn for_each(&self, f: &mut dyn FnMut(&[u32])) {
        let mut buf = vec![0u32; self.size];
        for &k in &self.keys {
            for (i, slot) in buf.iter_mut().enumerate() {
                *slot = k.label(self.width, i);
            }
            f(&buf);
        }
    }

    fn build(size: usize, width: u32, each_face: impl FnOnce(&mut dyn FnMut(&[u32]))) -> Self {
        let mut keys = Vec::new();
        each_face(&mut |face| keys.push(K::pack(face, width)));
        keys.sort_unstable();
        keys.dedup();
        Packed { size, width, keys }
    }
}

fn low_bits(bits: u32) -> u64 {
    u64::MAX.checked_shr(u64::BITS - bits).unwrap_or(0)
}

/// Drops the label at position `pos` from a packed face of `size` labels.
fn splice_out(key: u64, width: u32, pos: u32) -> u64 {
    let low = key & low_bits(width * pos);
    let high = key.checked_shr(width * (pos + 1)).unwrap_or(0);
    (high << (width * pos)) | low
}

/// Shadow of a sorted narrow level plus the given facets, without sorting
/// every shadow key globally. Faces keeping the top label of their parent
/// are deduplicated per top label and come out in order; faces that lose
/// it need one global sort.
fn narrow_shadow(up: &Packed<u64>, own: Vec<u64>) -> Vec<u64> {
    let (w, size) = (up.width, up.size as u32 - 1);
    let rest_mask = low_bits(w * size);
    let lost_top = union_of_runs(up.keys.iter().map(|&k| k & rest_mask));

    let mut kept_top = Vec::with_capacity(up.keys.len());
    let mut group = Vec::new();
    for chunk in up.keys.chunk_by(|a, b| a >> (w * size) == b >> (w * size)) {
        let top = chunk[0] >> (w * size);
        group.clear();
        for &k in chunk {
            let rest = k & rest_mask;
            group.extend((0..size).map(|p| splice_out(rest, w, p)));
        }
        group.sort_unstable();
        group.dedup();
        let shifted = top << (w * size.saturating_sub(1));
        kept_top.extend(group.iter().map(|&g| shifted | g));
    }
    merge_dedup(merge_dedup(own, lost_top), kept_top)
}

/// Sorted distinct values of a sequence made of ascending runs, by
/// pairwise merging. Overlapping runs shrink at every round.
fn union_of_runs(values: impl Iterator<Item = u64>) -> Vec<u64> {
    let mut runs: Vec<Vec<u64>> = Vec::new();
    let mut current: Vec<u64> = Vec::new();
    for v in values {
        match current.last() {
            Some(&last) if v < last => runs.push(std::mem::replace(&mut current, vec![v])),
            Some(&last) if v == last => {}
            _ => current.push(v),
        }
    }
    runs.push(current);
    while runs.len() > 1 {
        let mut next = Vec::with_capacity(runs.len() / 2 + 1);
        let mut it = runs.into_iter();
        while let Some(a) = it.next() {
            next.push(match it.next() {
                Some(b) => merge_dedup(a, b),
                None => a,
            });
        }
        runs = next;
    }
    runs.pop().unwrap_or_default()
}

fn merge_dedup(a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let next = match (a.get(i), b.get(j)) {
            (Some(&x), Some(&y)) if x <= y => {
                i += 1;
                j += usize::from(x == y);
                x
            }
            (_, Some(&y)) => {
                j += 1;
                y
            }
            (Some(&x), None) => {
                i += 1;
                x
            }
            (None, None) => unreachable!(),
        };
        out.push(next);
    }
    out
}

/// Facets of the size being built, packed when the level is narrow.
enum Own<'a> {
    Packed(Vec<u64>),
    Faces(&'a [&'a [u32]]),
}

fn shadow_each(level: &Level, emit: &mut dyn FnMut(&[u32])) {
    let mut scratch = Vec::new();
    level.for_each(&mut |face| {
        for skip in 0..face.len() {
            scratch.clear();
            scratch.extend_from_slice(&face[..skip]);
            scratch.extend_from_slice(&face[skip + 1..]);
            emit(&scratch);
        }
    });
}

impl Level {
    fn len(&self) -> usize {
        match self {
            Level::Narrow(p) => p.keys.len(),
            Level::Medium(p) => p.keys.len(),
            Level::Wide(v) => v.len(),
        }
    }

    fn for_each(&self, f: &mut dyn FnMut(&[u32])) {
        match self {
            Level::Narrow(p) => p.for_each(f),
            Level::Medium(p) => p.for_each(f),
            Level::Wide(faces) => faces.iter().for_each(|x| f(x)),
        }
    }

    /// `width` is the bit length of the largest label in the complex.
    fn build(size: usize, width: u32, own: Own<'_>, above: Option<&Level>) -> Level {
        let bits = size as u32 * width;
        debug_assert!(bits > u64::BITS || matches!(own, Own::Packed(_)));
        let own = match own {
            Own::Packed(mut keys) => {
                keys.sort();
                let keys = match above {
                    Some(Level::Narrow(up)) => narrow_shadow(up, keys),
                    Some(up) => {
                        let mut shadow = Packed::<u64>::build(size, width, |emit| {
                            shadow_each(up, emit)
                        });
                        merge_dedup(keys, std::mem::take(&mut shadow.keys))
                    }
                    None => keys,
                };
                return Level::Narrow(Packed { size, width, keys });
            }
            Own::Faces(faces) => faces,
        };
        let each_face = |emit: &mut dyn FnMut(&[u32])| {
            for f in own {
                emit(f);
            }
            if let Some(above) = above {
                shadow_each(above, emit);
            }
        };
        if bits <= u128::BITS {
            Level::Medium(Packed::build(size, width, each_face))
        } else {
            let mut faces = Vec::new();
            each_face(&mut |f| faces.push(f.to_vec()));
            faces.sort_unstable();
            faces.dedup();
            Level::Wide(faces)
        }
    }
}

/// `(f_{-1}, f_0, ..., f_{d-1})` with `f_{-1} = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FVector {
    entries: Vec<BigInt>,
}

impl FVector {
    /// Validates `f_{-1} = 1`, nonnegativity, and that a zero entry is
    /// followed only by zeros.
    pub fn new(entries: Vec<BigInt>) -> Result<Self> {
        if entries.first() != Some(&BigInt::from(1)) {
            return Err(Error::domain("an f-vector starts with f_{-1} = 1"));
        }
        if entries.iter().any(Signed::is_negative) {
            return Err(Error::domain("f-vector entries must be nonnegative"));
        }
        if let Some(z) = entries.iter().position(Zero::is_zero) {
            if entries[z..].iter().any(|e| !e.is_zero()) {
                return Err(Error::domain("f-vector has a nonzero entry after a zero"));
            }
        }
        Ok(FVector { entries })
    }

    pub fn from_u64s(entries: &[u64]) -> Result<Self> {
        Self::new(entries.iter().map(|&e| BigInt::from(e)).collect())
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_ints(&self.entries))
    }
}

/// h-vector from an f-vector of length `d + 1`:
/// `h_j = sum_{i<=j} (-1)^(j-i) C(d-i, j-i) f_{i-1}` (trimmed).
pub fn h_from_f(f: &FVector, d: usize) -> Result<IntPolynomial> {
    if d == 0 || f.len() != d + 1 {
        return Err(Error::domain(format!(
            "f-vector of length {} does not match d = {d}",
            f.len()
        )));
    }
    let (di, entries) = (d as i64, &f.entries);
    let h = (0..=d)
        .map(|j| {
            (0..=j)
                .map(|i| {
                    let term = binomial(di - i as i64, (j - i) as i64) * &entries[i];
                    if (j - i) % 2 == 1 {
                        -term
                    } else {
                        term
                    }
                })
                .sum()
        })
        .collect();
    Ok(IntPolynomial::new(h))
}
