//! Finite topological spaces and continuous maps.
//!
//! A finite topology is stored in Alexandrov form: the minimal open
//! neighborhood of each point. A family of subsets containing ∅ and the
//! carrier and closed under union and intersection is exactly the family of
//! up-sets of the induced specialization preorder, so this representation is
//! lossless while keeping every topology check O(points) — the open-set
//! lattice itself is only materialized by `frame::Frame`, under a size cap.

use std::collections::{BTreeSet, HashMap};
use thiserror::Error;

/// A set of points of some [`FiniteSpace`], as a bitmask. Carrier sizes are
/// capped at 64 points.
pub type PointSet = u64;

/// Iterates the point indices contained in a mask.
pub fn points_in(mask: PointSet) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask >> i & 1 == 1)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpaceError {
    #[error("carrier has {0} points, more than the supported 64")]
    TooManyPoints(usize),
    #[error("duplicate point name `{0}`")]
    DuplicateName(String),
    #[error("open set {0} mentions a point outside the carrier")]
    OutOfCarrier(String),
    #[error("the family of opens does not contain the empty set")]
    MissingEmptySet,
    #[error("the family of opens does not contain the full carrier")]
    MissingFullCarrier,
    #[error("opens are not closed under union: {a} ∪ {b} is missing")]
    NotClosedUnderUnion { a: String, b: String },
    #[error("opens are not closed under intersection: {a} ∩ {b} is missing")]
    NotClosedUnderIntersection { a: String, b: String },
    #[error("minimal neighborhood of `{0}` does not contain the point itself")]
    BadMinimalNeighborhood(String),
    #[error("minimal neighborhoods are not transitively closed at `{0}`")]
    NotUpClosed(String),
    #[error("space has {count} opens, more than the cap {cap}")]
    TooManyOpens { count: usize, cap: usize },
}

/// A finite topological space with named points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSpace {
    names: Vec<String>,
    /// `min_nbhd[x]` is the intersection of all opens containing `x`.
    min_nbhd: Vec<PointSet>,
}

fn render_set(names: &[String], mask: PointSet) -> String {
    let elems: Vec<&str> = points_in(mask).map(|i| names[i].as_str()).collect();
    format!("{{{}}}", elems.join(","))
}

impl FiniteSpace {
    /// Builds a space from an explicit family of opens, validating that the
    /// family contains ∅ and the carrier and is closed under pairwise union
    /// and intersection (finite unions and intersections then follow).
    pub fn from_opens(names: Vec<String>, opens: &[PointSet]) -> Result<Self, SpaceError> {
        let n = names.len();
        if n > 64 {
            return Err(SpaceError::TooManyPoints(n));
        }
        let mut seen = BTreeSet::new();
        for name in &names {
            if !seen.insert(name.clone()) {
                return Err(SpaceError::DuplicateName(name.clone()));
            }
        }
        let full: PointSet = if n == 64 { !0 } else { (1u64 << n) - 1 };
        let family: BTreeSet<PointSet> = opens.iter().copied().collect();
        for &u in &family {
            if u & !full != 0 {
                return Err(SpaceError::OutOfCarrier(format!("{u:#b}")));
            }
        }
        if !family.contains(&0) {
            return Err(SpaceError::MissingEmptySet);
        }
        if !family.contains(&full) {
            return Err(SpaceError::MissingFullCarrier);
        }
        for &u in &family {
            for &v in &family {
                if !family.contains(&(u | v)) {
                    return Err(SpaceError::NotClosedUnderUnion {
                        a: render_set(&names, u),
                        b: render_set(&names, v),
                    });
                }
                if !family.contains(&(u & v)) {
                    return Err(SpaceError::NotClosedUnderIntersection {
                        a: render_set(&names, u),
                        b: render_set(&names, v),
                    });
                }
            }
        }
        let min_nbhd = (0..n)
            .map(|x| {
                family
                    .iter()
                    .copied()
                    .filter(|u| u >> x & 1 == 1)
                    .fold(full, |acc, u| acc & u)
            })
            .collect();
        Ok(FiniteSpace { names, min_nbhd })
    }

    /// Builds a space directly from minimal open neighborhoods.
    pub fn from_min_nbhds(names: Vec<String>, min_nbhd: Vec<PointSet>) -> Result<Self, SpaceError> {
        let n = names.len();
        if n > 64 {
            return Err(SpaceError::TooManyPoints(n));
        }
        assert_eq!(min_nbhd.len(), n, "one minimal neighborhood per point");
        let mut seen = BTreeSet::new();
        for name in &names {
            if !seen.insert(name.clone()) {
                return Err(SpaceError::DuplicateName(name.clone()));
            }
        }
        for x in 0..n {
            if min_nbhd[x] >> x & 1 != 1 {
                return Err(SpaceError::BadMinimalNeighborhood(names[x].clone()));
            }
            for y in points_in(min_nbhd[x]) {
                if y >= n {
                    return Err(SpaceError::OutOfCarrier(names[x].clone()));
                }
                if min_nbhd[y] & !min_nbhd[x] != 0 {
                    return Err(SpaceError::NotUpClosed(names[x].clone()));
                }
            }
        }
        Ok(FiniteSpace { names, min_nbhd })
    }

    pub fn discrete(names: Vec<String>) -> Self {
        let min_nbhd = (0..names.len()).map(|x| 1u64 << x).collect();
        FiniteSpace { names, min_nbhd }
    }

    pub fn indiscrete(names: Vec<String>) -> Self {
        let n = names.len();
        let full: PointSet = if n == 0 { 0 } else { (1u64 << n) - 1 };
        FiniteSpace { names, min_nbhd: vec![full; n] }
    }

    pub fn empty() -> Self {
        FiniteSpace { names: vec![], min_nbhd: vec![] }
    }

    pub fn point(name: &str) -> Self {
        FiniteSpace { names: vec![name.to_string()], min_nbhd: vec![1] }
    }

    /// Two points `a`, `b` with opens ∅, {a}, {a,b}.
    pub fn sierpinski() -> Self {
        FiniteSpace {
            names: vec!["a".into(), "b".into()],
            min_nbhd: vec![0b01, 0b11],
        }
    }

    pub fn discrete_numbered(prefix: &str, n: usize) -> Self {
        Self::discrete((0..n).map(|i| format!("{prefix}{i}")).collect())
    }

    pub fn n_points(&self) -> usize {
        self.names.len()
    }

    pub fn full_mask(&self) -> PointSet {
        match self.names.len() {
            0 => 0,
            64 => !0,
            n => (1u64 << n) - 1,
        }
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn point_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn min_nbhd(&self, x: usize) -> PointSet {
        self.min_nbhd[x]
    }

    pub fn is_open(&self, mask: PointSet) -> bool {
        points_in(mask).all(|x| self.min_nbhd[x] & !mask == 0)
    }

    /// Render a point set with names, for witnesses and dumps.
    pub fn render(&self, mask: PointSet) -> String {
        render_set(&self.names, mask)
    }

    /// All opens, sorted ascending as masks. Errors when the lattice exceeds
    /// `cap` elements; large discrete spaces are the typical offender.
    pub fn enumerate_opens(&self, cap: usize) -> Result<Vec<PointSet>, SpaceError> {
        // Every open is a union of minimal neighborhoods, so close {∅} under
        // adjoining one minimal neighborhood at a time.
        let mut known: BTreeSet<PointSet> = BTreeSet::new();
        known.insert(0);
        let mut work: Vec<PointSet> = vec![0];
        while let Some(u) = work.pop() {
            for x in 0..self.names.len() {
                let v = u | self.min_nbhd[x];
                if known.insert(v) {
                    if known.len() > cap {
                        return Err(SpaceError::TooManyOpens { count: known.len(), cap });
                    }
                    work.push(v);
                }
            }
        }
        Ok(known.into_iter().collect())
    }

    /// Distinct points have distinct minimal neighborhoods. For finite
    /// spaces this is both T0 and sobriety of the presentation.
    pub fn is_t0(&self) -> bool {
        let set: BTreeSet<PointSet> = self.min_nbhd.iter().copied().collect();
        set.len() == self.names.len()
    }

    /// Searches for a homeomorphism onto `other`, returning the point
    /// bijection if one exists.
    pub fn homeomorphism_to(&self, other: &FiniteSpace) -> Option<Vec<usize>> {
        let n = self.n_points();
        if n != other.n_points() {
            return None;
        }
        // Invariant prefilter: (|M_x|, number of neighborhoods containing x).
        let profile = |sp: &FiniteSpace, x: usize| {
            let above = (0..n).filter(|&y| sp.min_nbhd[y] >> x & 1 == 1).count();
            (sp.min_nbhd[x].count_ones(), above)
        };
        let mine: Vec<_> = (0..n).map(|x| profile(self, x)).collect();
        let theirs: Vec<_> = (0..n).map(|x| profile(other, x)).collect();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        fn extend(
            x: usize,
            n: usize,
            mine: &[(u32, usize)],
            theirs: &[(u32, usize)],
            a: &FiniteSpace,
            b: &FiniteSpace,
            map: &mut Vec<usize>,
            used: &mut Vec<bool>,
        ) -> bool {
            if x == n {
                return (0..n).all(|p| {
                    let image: PointSet = points_in(a.min_nbhd[p]).map(|q| 1u64 << map[q]).sum();
                    image == b.min_nbhd[map[p]]
                });
            }
            for y in 0..n {
                if used[y] || mine[x] != theirs[y] {
                    continue;
                }
                // Partial consistency: already-mapped points must respect
                // membership in minimal neighborhoods both ways.
                let ok = (0..x).all(|p| {
                    let xy = a.min_nbhd[p] >> x & 1 == b.min_nbhd[map[p]] >> y & 1;
                    let yx = a.min_nbhd[x] >> p & 1 == b.min_nbhd[y] >> map[p] & 1;
                    xy && yx
                });
                if !ok {
                    continue;
                }
                map[x] = y;
                used[y] = true;
                if extend(x + 1, n, mine, theirs, a, b, map, used) {
                    return true;
                }
                used[y] = false;
                map[x] = usize::MAX;
            }
            false
        }
        if extend(0, n, &mine, &theirs, self, other, &mut map, &mut used) {
            Some(map)
        } else {
            None
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MapError {
    #[error("point map has {got} entries for a {want}-point source")]
    WrongArity { got: usize, want: usize },
    #[error("point map sends `{0}` outside the target carrier")]
    OutOfRange(String),
    #[error("not continuous: preimage of {open} is not open (fails at `{point}`)")]
    NotContinuous { open: String, point: String },
    #[error("not open: image {image} of the open {open} is not open")]
    OpennessViolation { open: String, image: String },
    #[error("maps do not share a codomain")]
    CodomainMismatch,
    #[error(transparent)]
    Space(#[from] SpaceError),
}

/// A continuous map between finite spaces. Continuity is validated at
/// construction, so the type is honest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuousMap {
    source: FiniteSpace,
    target: FiniteSpace,
    map: Vec<usize>,
}

impl ContinuousMap {
    pub fn new(
        source: FiniteSpace,
        target: FiniteSpace,
        map: Vec<usize>,
    ) -> Result<Self, MapError> {
        if map.len() != source.n_points() {
            return Err(MapError::WrongArity { got: map.len(), want: source.n_points() });
        }
        for (x, &y) in map.iter().enumerate() {
            if y >= target.n_points() {
                return Err(MapError::OutOfRange(source.name(x).to_string()));
            }
        }
        // Continuity in Alexandrov form: f(M_x) ⊆ M_{f(x)} for every x.
        for x in 0..source.n_points() {
            for y in points_in(source.min_nbhd(x)) {
                if target.min_nbhd(map[x]) >> map[y] & 1 != 1 {
                    return Err(MapError::NotContinuous {
                        open: target.render(target.min_nbhd(map[x])),
                        point: source.name(y).to_string(),
                    });
                }
            }
        }
        Ok(ContinuousMap { source, target, map })
    }

    pub fn identity(space: &FiniteSpace) -> Self {
        ContinuousMap {
            source: space.clone(),
            target: space.clone(),
            map: (0..space.n_points()).collect(),
        }
    }

    pub fn source(&self) -> &FiniteSpace {
        &self.source
    }

    pub fn target(&self) -> &FiniteSpace {
        &self.target
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn point_map(&self) -> &[usize] {
        &self.map
    }

    pub fn image_mask(&self, u: PointSet) -> PointSet {
        points_in(u).fold(0, |acc, x| acc | 1u64 << self.map[x])
    }

    pub fn preimage_mask(&self, v: PointSet) -> PointSet {
        (0..self.source.n_points())
            .filter(|&x| v >> self.map[x] & 1 == 1)
            .fold(0, |acc, x| acc | 1u64 << x)
    }

    /// A map is open iff the image of every open is open; in Alexandrov form
    /// this reduces to M_{f(x)} ⊆ f(M_x) for every x. On failure returns the
    /// witness open whose image is not open.
    pub fn openness_witness(&self) -> Option<PointSet> {
        for x in 0..self.source.n_points() {
            let image = self.image_mask(self.source.min_nbhd(x));
            if self.target.min_nbhd(self.map[x]) & !image != 0 {
                return Some(self.source.min_nbhd(x));
            }
        }
        None
    }

    pub fn is_open(&self) -> bool {
        self.openness_witness().is_none()
    }

    /// Local homeomorphism check: every point has an open neighborhood
    /// mapped homeomorphically onto an open subset of the target. It
    /// suffices to test the minimal neighborhood — a restriction of a homeo
    /// onto an open image to a smaller open is again one.
    pub fn is_local_homeo(&self) -> bool {
        (0..self.source.n_points()).all(|x| self.nbhd_is_homeo(x))
    }

    fn nbhd_is_homeo(&self, x: usize) -> bool {
        let nbhd: Vec<usize> = points_in(self.source.min_nbhd(x)).collect();
        // Injective on M_x.
        let mut seen = BTreeSet::new();
        for &y in &nbhd {
            if !seen.insert(self.map[y]) {
                return false;
            }
        }
        // Image open in the target.
        let image = self.image_mask(self.source.min_nbhd(x));
        if !self.target.is_open(image) {
            return false;
        }
        // Order-reflecting on M_x (the inverse is then continuous).
        for &y in &nbhd {
            for &z in &nbhd {
                let src = self.source.min_nbhd(z) >> y & 1;
                let dst = self.target.min_nbhd(self.map[z]) >> self.map[y] & 1;
                if src != dst {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_injective(&self) -> bool {
        let set: BTreeSet<usize> = self.map.iter().copied().collect();
        set.len() == self.map.len()
    }

    pub fn compose(&self, then: &ContinuousMap) -> ContinuousMap {
        assert_eq!(self.target, then.source, "composable maps required");
        ContinuousMap {
            source: self.source.clone(),
            target: then.target.clone(),
            map: self.map.iter().map(|&x| then.map[x]).collect(),
        }
    }
}

/// A pullback of two continuous maps with a shared codomain, with its two
/// projections. Points are the pairs with equal images, topologized as a
/// subspace of the product.
#[derive(Debug, Clone)]
pub struct Pullback {
    pub space: FiniteSpace,
    /// Point `k` of the pullback is the pair `pairs[k]`.
    pub pairs: Vec<(usize, usize)>,
    pub proj1: ContinuousMap,
    pub proj2: ContinuousMap,
}

impl Pullback {
    pub fn pair_index(&self, a: usize, b: usize) -> Option<usize> {
        self.pairs.iter().position(|&p| p == (a, b))
    }
}

/// Carrier `{(a,b) | f(a) = g(b)}` with the subspace topology of the
/// product; the projections are returned as continuous maps.
pub fn pullback_space(f: &ContinuousMap, g: &ContinuousMap) -> Result<Pullback, MapError> {
    if f.target() != g.target() {
        return Err(MapError::CodomainMismatch);
    }
    let mut pairs = Vec::new();
    for a in 0..f.source().n_points() {
        for b in 0..g.source().n_points() {
            if f.apply(a) == g.apply(b) {
                pairs.push((a, b));
            }
        }
    }
    if pairs.len() > 64 {
        return Err(MapError::Space(SpaceError::TooManyPoints(pairs.len())));
    }
    let index: HashMap<(usize, usize), usize> =
        pairs.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    let names = pairs
        .iter()
        .map(|&(a, b)| format!("({},{})", f.source().name(a), g.source().name(b)))
        .collect();
    let min_nbhd = pairs
        .iter()
        .map(|&(a, b)| {
            let ma = f.source().min_nbhd(a);
            let mb = g.source().min_nbhd(b);
            pairs
                .iter()
                .enumerate()
                .filter(|&(_, &(x, y))| ma >> x & 1 == 1 && mb >> y & 1 == 1)
                .fold(0u64, |acc, (k, _)| acc | 1u64 << k)
        })
        .collect();
    let space = FiniteSpace { names, min_nbhd };
    let proj1 = ContinuousMap {
        source: space.clone(),
        target: f.source().clone(),
        map: pairs.iter().map(|&(a, _)| a).collect(),
    };
    let proj2 = ContinuousMap {
        source: space.clone(),
        target: g.source().clone(),
        map: pairs.iter().map(|&(_, b)| b).collect(),
    };
    let _ = &index;
    Ok(Pullback { space, pairs, proj1, proj2 })
}
