//! Finite frames and join-preserving maps between them.
//!
//! Every frame here is kept in "opens form": the elements are the open sets
//! of a finite space, joins are unions and meets are intersections. This is
//! no loss of generality — a finite distributive lattice is isomorphic to
//! the up-set lattice of its prime elements (`Frame::from_order` performs
//! that spatialization and returns the witness) — and it makes every lattice
//! operation a bitmask operation.

use std::collections::HashMap;
use thiserror::Error;

use crate::space::{ContinuousMap, FiniteSpace, MapError, PointSet, SpaceError};

pub type Elt = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("order is not reflexive at element {0}")]
    NotReflexive(usize),
    #[error("order is not antisymmetric on ({0}, {1})")]
    NotAntisymmetric(usize, usize),
    #[error("order is not transitive on ({0}, {1}, {2})")]
    NotTransitive(usize, usize, usize),
    #[error("elements {0} and {1} have no least upper bound")]
    MissingJoin(usize, usize),
    #[error("elements {0} and {1} have no greatest lower bound")]
    MissingMeet(usize, usize),
    #[error("no bottom element")]
    MissingBottom,
    #[error("no top element")]
    MissingTop,
    #[error("frame law fails: {a} ∧ ({b} ∨ {c}) ≠ ({a} ∧ {b}) ∨ ({a} ∧ {c})")]
    NotDistributive { a: usize, b: usize, c: usize },
    #[error(transparent)]
    Space(#[from] SpaceError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AdjointError {
    #[error("map does not preserve joins: {witness}")]
    NotJoinPreserving { witness: String },
    #[error("table has {got} entries for a {want}-element source")]
    WrongArity { got: usize, want: usize },
    #[error("table entry {0} is out of range for the target")]
    OutOfRange(usize),
}

/// A finite frame presented as the lattice of opens of a finite space,
/// sorted ascending as bitmasks (so index 0 is ⊥ and the last index is ⊤).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frame {
    n_points: usize,
    opens: Vec<PointSet>,
    index: HashMap<PointSet, Elt>,
}

impl Frame {
    /// The lattice of opens of a space, ordered by inclusion. `cap` bounds
    /// the number of elements that may be materialized.
    pub fn of_space(space: &FiniteSpace, cap: usize) -> Result<Frame, SpaceError> {
        let opens = space.enumerate_opens(cap)?;
        Ok(Frame::from_sorted_opens(space.n_points(), opens))
    }

    fn from_sorted_opens(n_points: usize, opens: Vec<PointSet>) -> Frame {
        let index = opens.iter().enumerate().map(|(i, &u)| (u, i as Elt)).collect();
        Frame { n_points, opens, index }
    }

    /// Builds a frame from an abstract finite lattice given by its order
    /// relation, validating the lattice and frame laws, and spatializing the
    /// result. Returns the frame together with the witness table sending the
    /// i-th abstract element to its frame element.
    pub fn from_order(
        n: usize,
        le: impl Fn(usize, usize) -> bool,
    ) -> Result<(Frame, Vec<Elt>), LatticeError> {
        for a in 0..n {
            if !le(a, a) {
                return Err(LatticeError::NotReflexive(a));
            }
        }
        for a in 0..n {
            for b in 0..n {
                if a != b && le(a, b) && le(b, a) {
                    return Err(LatticeError::NotAntisymmetric(a, b));
                }
                for c in 0..n {
                    if le(a, b) && le(b, c) && !le(a, c) {
                        return Err(LatticeError::NotTransitive(a, b, c));
                    }
                }
            }
        }
        if n == 0 {
            return Err(LatticeError::MissingBottom);
        }
        let mut join = vec![0usize; n * n];
        let mut meet = vec![0usize; n * n];
        for a in 0..n {
            for b in 0..n {
                let mut best: Option<usize> = None;
                for c in 0..n {
                    if le(a, c) && le(b, c) && best.map_or(true, |m| le(c, m)) {
                        best = Some(c);
                    }
                }
                let j = best.ok_or(LatticeError::MissingJoin(a, b))?;
                if !(0..n).all(|c| !(le(a, c) && le(b, c)) || le(j, c)) {
                    return Err(LatticeError::MissingJoin(a, b));
                }
                join[a * n + b] = j;
                let mut best: Option<usize> = None;
                for c in 0..n {
                    if le(c, a) && le(c, b) && best.map_or(true, |m| le(m, c)) {
                        best = Some(c);
                    }
                }
                let m = best.ok_or(LatticeError::MissingMeet(a, b))?;
                if !(0..n).all(|c| !(le(c, a) && le(c, b)) || le(c, m)) {
                    return Err(LatticeError::MissingMeet(a, b));
                }
                meet[a * n + b] = m;
            }
        }
        let top = (0..n)
            .find(|&t| (0..n).all(|a| le(a, t)))
            .ok_or(LatticeError::MissingTop)?;
        (0..n)
            .find(|&b| (0..n).all(|a| le(b, a)))
            .ok_or(LatticeError::MissingBottom)?;
        // Binary distributivity suffices in a finite lattice.
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if meet[a * n + join[b * n + c]]
                        != join[meet[a * n + b] * n + meet[a * n + c]]
                    {
                        return Err(LatticeError::NotDistributive { a, b, c });
                    }
                }
            }
        }
        // Primes = meet-irreducibles (equivalent in a distributive lattice):
        // p ≠ ⊤ and the meet of everything strictly above p stays above p.
        let mut primes = Vec::new();
        for p in 0..n {
            if p == top {
                continue;
            }
            let above: Vec<usize> = (0..n).filter(|&q| q != p && le(p, q)).collect();
            let inf = above.iter().fold(top, |acc, &q| meet[acc * n + q]);
            if inf != p {
                primes.push(p);
            }
        }
        assert!(primes.len() <= 64, "spatialization exceeds 64 points");
        let mask_of = |a: usize| -> PointSet {
            primes
                .iter()
                .enumerate()
                .filter(|&(_, &p)| !le(a, p))
                .fold(0u64, |acc, (k, _)| acc | 1u64 << k)
        };
        let mut masks: Vec<PointSet> = (0..n).map(mask_of).collect();
        masks.sort_unstable();
        masks.dedup();
        // Birkhoff: a finite distributive lattice embeds in the up-sets of
        // its primes, so the masks are pairwise distinct.
        assert_eq!(masks.len(), n, "finite distributive lattice must be spatial");
        let frame = Frame::from_sorted_opens(primes.len(), masks);
        let witness = (0..n).map(|a| frame.index[&mask_of(a)]).collect();
        Ok((frame, witness))
    }

    pub fn len(&self) -> usize {
        self.opens.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn element(&self, i: Elt) -> PointSet {
        self.opens[i as usize]
    }

    pub fn elements(&self) -> impl Iterator<Item = Elt> + '_ {
        (0..self.len() as Elt).map(|i| i)
    }

    pub fn index_of(&self, mask: PointSet) -> Option<Elt> {
        self.index.get(&mask).copied()
    }

    pub fn bottom(&self) -> Elt {
        0
    }

    pub fn top(&self) -> Elt {
        (self.len() - 1) as Elt
    }

    pub fn le(&self, a: Elt, b: Elt) -> bool {
        self.opens[a as usize] & !self.opens[b as usize] == 0
    }

    pub fn join(&self, a: Elt, b: Elt) -> Elt {
        self.index[&(self.opens[a as usize] | self.opens[b as usize])]
    }

    pub fn meet(&self, a: Elt, b: Elt) -> Elt {
        self.index[&(self.opens[a as usize] & self.opens[b as usize])]
    }

    pub fn join_all(&self, items: impl IntoIterator<Item = Elt>) -> Elt {
        let mask = items
            .into_iter()
            .fold(0u64, |acc, i| acc | self.opens[i as usize]);
        self.index[&mask]
    }

    pub fn meet_all(&self, items: impl IntoIterator<Item = Elt>) -> Elt {
        let mask = items
            .into_iter()
            .fold(self.opens[self.top() as usize], |acc, i| acc & self.opens[i as usize]);
        self.index[&mask]
    }

    /// Join-irreducible elements: the distinct minimal neighborhoods of the
    /// presenting space.
    pub fn join_irreducibles(&self) -> Vec<Elt> {
        let mut out: Vec<Elt> = Vec::new();
        for a in self.elements() {
            let u = self.element(a);
            if u == 0 {
                continue;
            }
            let below = self
                .elements()
                .filter(|&b| b != a && self.le(b, a))
                .fold(0u64, |acc, b| acc | self.element(b));
            if below != u {
                out.push(a);
            }
        }
        out
    }

    /// Prime (= meet-irreducible) elements.
    pub fn primes(&self) -> Vec<Elt> {
        let mut out = Vec::new();
        for p in self.elements() {
            if p == self.top() {
                continue;
            }
            let above = self
                .elements()
                .filter(|&q| q != p && self.le(p, q))
                .fold(self.element(self.top()), |acc, q| acc & self.element(q));
            if above != self.element(p) {
                out.push(p);
            }
        }
        out
    }

    /// The frame law, re-checkable on demand (construction guarantees it).
    pub fn check_frame_law(&self) -> Result<(), LatticeError> {
        for a in self.elements() {
            for b in self.elements() {
                for c in self.elements() {
                    let lhs = self.meet(a, self.join(b, c));
                    let rhs = self.join(self.meet(a, b), self.meet(a, c));
                    if lhs != rhs {
                        return Err(LatticeError::NotDistributive {
                            a: a as usize,
                            b: b as usize,
                            c: c as usize,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Searches for an order isomorphism onto `other` via the posets of
    /// join-irreducibles; returns the element bijection if one exists.
    pub fn order_iso(&self, other: &Frame) -> Option<Vec<Elt>> {
        if self.len() != other.len() {
            return None;
        }
        let ja = self.join_irreducibles();
        let jb = other.join_irreducibles();
        if ja.len() != jb.len() {
            return None;
        }
        let k = ja.len();
        let profile = |f: &Frame, js: &[Elt], x: Elt| {
            let below = js.iter().filter(|&&y| f.le(y, x)).count();
            let above = js.iter().filter(|&&y| f.le(x, y)).count();
            (below, above)
        };
        let pa: Vec<_> = ja.iter().map(|&x| profile(self, &ja, x)).collect();
        let pb: Vec<_> = jb.iter().map(|&x| profile(other, &jb, x)).collect();
        let mut map = vec![usize::MAX; k];
        let mut used = vec![false; k];
        fn extend(
            i: usize,
            k: usize,
            ja: &[Elt],
            jb: &[Elt],
            pa: &[(usize, usize)],
            pb: &[(usize, usize)],
            a: &Frame,
            b: &Frame,
            map: &mut [usize],
            used: &mut [bool],
        ) -> bool {
            if i == k {
                return true;
            }
            for j in 0..k {
                if used[j] || pa[i] != pb[j] {
                    continue;
                }
                let ok = (0..i).all(|p| {
                    a.le(ja[p], ja[i]) == b.le(jb[map[p]], jb[j])
                        && a.le(ja[i], ja[p]) == b.le(jb[j], jb[map[p]])
                });
                if !ok {
                    continue;
                }
                map[i] = j;
                used[j] = true;
                if extend(i + 1, k, ja, jb, pa, pb, a, b, map, used) {
                    return true;
                }
                used[j] = false;
                map[i] = usize::MAX;
            }
            false
        }
        if !extend(0, k, &ja, &jb, &pa, &pb, self, other, &mut map, &mut used) {
            return None;
        }
        // Extend over joins: iso(u) = ⋁ { φ(j) | j ≤ u }.
        let mut out = Vec::with_capacity(self.len());
        for u in self.elements() {
            let img = other.join_all(
                ja.iter()
                    .enumerate()
                    .filter(|&(_, &j)| self.le(j, u))
                    .map(|(i, _)| jb[map[i]]),
            );
            out.push(img);
        }
        // Final validation: bijective and order-preserving both ways.
        let mut seen = vec![false; other.len()];
        for &v in &out {
            if seen[v as usize] {
                return None;
            }
            seen[v as usize] = true;
        }
        for a in self.elements() {
            for b in self.elements() {
                if self.le(a, b) != other.le(out[a as usize], out[b as usize]) {
                    return None;
                }
            }
        }
        Some(out)
    }
}

/// An unvalidated table between two frames. Used for right adjoints and
/// other maps that are not required to preserve joins.
#[derive(Debug, Clone, PartialEq)]
pub struct FrameMap {
    pub source: Frame,
    pub target: Frame,
    pub table: Vec<Elt>,
}

impl FrameMap {
    pub fn new(source: Frame, target: Frame, table: Vec<Elt>) -> Result<Self, AdjointError> {
        if table.len() != source.len() {
            return Err(AdjointError::WrongArity { got: table.len(), want: source.len() });
        }
        if let Some(&bad) = table.iter().find(|&&e| (e as usize) >= target.len()) {
            return Err(AdjointError::OutOfRange(bad as usize));
        }
        Ok(FrameMap { source, target, table })
    }

    pub fn apply(&self, a: Elt) -> Elt {
        self.table[a as usize]
    }

    /// Witness of a failed join preservation: either the empty join or a
    /// pair. Preserving ∅ and binary joins gives all finite joins.
    pub fn join_preservation_witness(&self) -> Option<String> {
        if self.apply(self.source.bottom()) != self.target.bottom() {
            return Some("empty join (bottom is not sent to bottom)".to_string());
        }
        for a in self.source.elements() {
            for b in self.source.elements() {
                let lhs = self.apply(self.source.join(a, b));
                let rhs = self.target.join(self.apply(a), self.apply(b));
                if lhs != rhs {
                    return Some(format!("pair ({a}, {b})"));
                }
            }
        }
        None
    }

    pub fn preserves_meets(&self) -> bool {
        if self.apply(self.source.top()) != self.target.top() {
            return false;
        }
        self.source.elements().all(|a| {
            self.source.elements().all(|b| {
                self.apply(self.source.meet(a, b))
                    == self.target.meet(self.apply(a), self.apply(b))
            })
        })
    }

    /// Frame homomorphism: preserves all joins, finite meets and top.
    pub fn is_frame_hom(&self) -> bool {
        self.join_preservation_witness().is_none()
            && self.apply(self.source.top()) == self.target.top()
            && self.source.elements().all(|a| {
                self.source.elements().all(|b| {
                    self.apply(self.source.meet(a, b))
                        == self.target.meet(self.apply(a), self.apply(b))
                })
            })
    }

    pub fn compose(&self, then: &FrameMap) -> FrameMap {
        assert_eq!(self.target, then.source);
        FrameMap {
            source: self.source.clone(),
            target: then.target.clone(),
            table: self.table.iter().map(|&a| then.apply(a)).collect(),
        }
    }
}

/// A join-preserving map between finite frames (a sup-lattice map),
/// validated at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct SupMap(FrameMap);

impl SupMap {
    pub fn new(source: Frame, target: Frame, table: Vec<Elt>) -> Result<Self, AdjointError> {
        let raw = FrameMap::new(source, target, table)?;
        match raw.join_preservation_witness() {
            None => Ok(SupMap(raw)),
            Some(witness) => Err(AdjointError::NotJoinPreserving { witness }),
        }
    }

    pub fn identity(frame: &Frame) -> Self {
        SupMap(FrameMap {
            source: frame.clone(),
            target: frame.clone(),
            table: frame.elements().collect(),
        })
    }

    pub fn as_map(&self) -> &FrameMap {
        &self.0
    }

    pub fn source(&self) -> &Frame {
        &self.0.source
    }

    pub fn target(&self) -> &Frame {
        &self.0.target
    }

    pub fn apply(&self, a: Elt) -> Elt {
        self.0.apply(a)
    }

    pub fn table(&self) -> &[Elt] {
        &self.0.table
    }
}

/// The right adjoint of a join-preserving map: g(x) = ⋁{y | f(y) ≤ x}. The
/// pair then satisfies f(y) ≤ x ⟺ y ≤ g(x).
pub fn right_adjoint(f: &SupMap) -> FrameMap {
    let src = f.source();
    let dst = f.target();
    let table = dst
        .elements()
        .map(|x| src.join_all(src.elements().filter(|&y| dst.le(f.apply(y), x))))
        .collect();
    FrameMap { source: dst.clone(), target: src.clone(), table }
}

/// Checks the Galois biconditional f(y) ≤ x ⟺ y ≤ g(x) over all pairs.
pub fn galois_witness(f: &FrameMap, g: &FrameMap) -> Option<(Elt, Elt)> {
    for y in f.source.elements() {
        for x in g.source.elements() {
            let lhs = f.target.le(f.apply(y), x);
            let rhs = f.source.le(y, g.apply(x));
            if lhs != rhs {
                return Some((y, x));
            }
        }
    }
    None
}

/// The direct image map U ↦ f(U) on open-set frames. Join-preserving (and
/// left adjoint to the preimage) exactly when `f` is open; otherwise an
/// `OpennessViolation` names an open whose image is not open.
pub fn direct_image(f: &ContinuousMap, cap: usize) -> Result<SupMap, MapError> {
    let src = Frame::of_space(f.source(), cap)?;
    let dst = Frame::of_space(f.target(), cap)?;
    let mut table = Vec::with_capacity(src.len());
    for u in src.elements() {
        let image = f.image_mask(src.element(u));
        match dst.index_of(image) {
            Some(v) => table.push(v),
            None => {
                return Err(MapError::OpennessViolation {
                    open: f.source().render(src.element(u)),
                    image: f.target().render(image),
                })
            }
        }
    }
    Ok(SupMap(FrameMap { source: src, target: dst, table }))
}

/// The preimage map V ↦ f⁻¹(V); always a frame homomorphism.
pub fn preimage(f: &ContinuousMap, cap: usize) -> Result<SupMap, MapError> {
    let src = Frame::of_space(f.target(), cap)?;
    let dst = Frame::of_space(f.source(), cap)?;
    let table = src
        .elements()
        .map(|v| {
            dst.index_of(f.preimage_mask(src.element(v)))
                .expect("preimages of opens are open for a continuous map")
        })
        .collect();
    Ok(SupMap(FrameMap { source: src, target: dst, table }))
}

/// The space of points (frame homomorphisms into 2, i.e. primes) of a
/// finite frame, with the canonical topology, plus the witness isomorphism
/// from the frame onto the frame of opens of the point space.
pub fn points_of_frame(l: &Frame) -> (FiniteSpace, SupMap) {
    let primes = l.primes();
    let names = (0..primes.len()).map(|i| format!("x{i}")).collect();
    let mask_of = |a: Elt| -> PointSet {
        primes
            .iter()
            .enumerate()
            .filter(|&(_, &p)| !l.le(a, p))
            .fold(0u64, |acc, (k, _)| acc | 1u64 << k)
    };
    let opens: Vec<PointSet> = {
        let mut v: Vec<PointSet> = l.elements().map(mask_of).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    assert_eq!(opens.len(), l.len(), "finite frames are spatial");
    let space = FiniteSpace::from_opens(names, &opens)
        .expect("point-space opens are closed under union and intersection");
    let target = Frame::from_sorted_opens(space.n_points(), opens);
    let table = l.elements().map(|a| target.index_of(mask_of(a)).unwrap()).collect();
    let iso = SupMap(FrameMap { source: l.clone(), target, table });
    (space, iso)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::points_in;
    use proptest::prelude::*;

    fn chain(n: usize) -> Frame {
        // n-element chain as opens of a (n-1)-point "staircase" space.
        let pts = n - 1;
        let names = (0..pts).map(|i| format!("c{i}")).collect();
        let min_nbhd = (0..pts).map(|i| (1u64 << (i + 1)) - 1).collect();
        let sp = FiniteSpace::from_min_nbhds(names, min_nbhd).unwrap();
        Frame::of_space(&sp, 64).unwrap()
    }

    #[test]
    fn one_point_discrete_space_gives_two_element_frame() {
        let f = Frame::of_space(&FiniteSpace::point("x"), 16).unwrap();
        assert_eq!(f.len(), 2);
        assert_ne!(f.bottom(), f.top());
    }

    #[test]
    fn two_point_discrete_space_gives_boolean_frame() {
        let f = Frame::of_space(&FiniteSpace::discrete_numbered("p", 2), 16).unwrap();
        assert_eq!(f.len(), 4);
        assert_eq!(f.join_irreducibles().len(), 2);
    }

    #[test]
    fn sierpinski_space_gives_three_chain() {
        let f = Frame::of_space(&FiniteSpace::sierpinski(), 16).unwrap();
        assert_eq!(f.len(), 3);
        let c = chain(3);
        assert!(f.order_iso(&c).is_some());
    }

    #[test]
    fn from_order_spatializes_a_chain() {
        // Abstract 3-chain 0 < 1 < 2.
        let (f, w) = Frame::from_order(3, |a, b| a <= b).unwrap();
        assert_eq!(f.len(), 3);
        assert_eq!(w.len(), 3);
        assert!(f.le(w[0], w[1]) && f.le(w[1], w[2]));
        assert_eq!(w[0], f.bottom());
        assert_eq!(w[2], f.top());
    }

    #[test]
    fn from_order_rejects_non_lattices_and_non_distributive() {
        // Two incomparable elements with no join: {0, 1} antichain.
        let err = Frame::from_order(2, |a, b| a == b).unwrap_err();
        assert!(matches!(err, LatticeError::MissingJoin(..) | LatticeError::MissingMeet(..)));
        // Diamond M3: 0 < a,b,c < 1, pairwise incomparable — a lattice but
        // not distributive.
        let le = |x: usize, y: usize| x == y || x == 0 || y == 4;
        let err = Frame::from_order(5, le).unwrap_err();
        assert!(matches!(err, LatticeError::NotDistributive { .. }));
    }

    #[test]
    fn identity_is_self_adjoint() {
        let f = Frame::of_space(&FiniteSpace::discrete_numbered("p", 2), 16).unwrap();
        let id = SupMap::identity(&f);
        let adj = right_adjoint(&id);
        assert_eq!(adj.table, id.table());
        assert!(galois_witness(id.as_map(), &adj).is_none());
    }

    #[test]
    fn constant_bottom_map_has_constant_top_adjoint() {
        let b4 = Frame::of_space(&FiniteSpace::discrete_numbered("p", 2), 16).unwrap();
        let f = SupMap::new(b4.clone(), b4.clone(), vec![0; 4]).unwrap();
        let adj = right_adjoint(&f);
        assert!(adj.table.iter().all(|&x| x == b4.top()));
        assert!(galois_witness(f.as_map(), &adj).is_none());
    }

    #[test]
    fn non_join_preserving_map_is_rejected_with_witness() {
        let b4 = Frame::of_space(&FiniteSpace::discrete_numbered("p", 2), 16).unwrap();
        // Send both atoms to bottom but top to top: breaks the pair join.
        let mut table = vec![0; 4];
        table[b4.top() as usize] = b4.top();
        let err = SupMap::new(b4.clone(), b4, table).unwrap_err();
        match err {
            AdjointError::NotJoinPreserving { witness } => {
                assert!(witness.contains("pair"), "witness was {witness}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn direct_image_of_identity_is_identity() {
        let sier = FiniteSpace::sierpinski();
        let id = ContinuousMap::identity(&sier);
        let di = direct_image(&id, 16).unwrap();
        assert_eq!(di.table(), SupMap::identity(&di.source().clone()).table());
    }

    #[test]
    fn direct_image_openness_violation_names_the_open() {
        let pt = FiniteSpace::point("b");
        let sier = FiniteSpace::sierpinski();
        let incl = ContinuousMap::new(pt, sier, vec![1]).unwrap();
        match direct_image(&incl, 16).unwrap_err() {
            MapError::OpennessViolation { open, image } => {
                assert_eq!(open, "{b}");
                assert_eq!(image, "{b}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn points_of_two_element_frame_is_one_point_space() {
        let f = Frame::of_space(&FiniteSpace::point("x"), 16).unwrap();
        let (space, iso) = points_of_frame(&f);
        assert_eq!(space.n_points(), 1);
        assert!(iso.as_map().is_frame_hom());
    }

    #[test]
    fn points_of_boolean_frame_is_two_point_discrete() {
        let f = Frame::of_space(&FiniteSpace::discrete_numbered("p", 2), 16).unwrap();
        let (space, _) = points_of_frame(&f);
        assert!(space.homeomorphism_to(&FiniteSpace::discrete_numbered("q", 2)).is_some());
    }

    #[test]
    fn points_of_three_chain_is_sierpinski() {
        let c = chain(3);
        let (space, iso) = points_of_frame(&c);
        assert!(space.homeomorphism_to(&FiniteSpace::sierpinski()).is_some());
        assert!(iso.as_map().is_frame_hom());
    }

    #[test]
    fn spatialization_round_trip_on_assorted_frames() {
        for sp in [
            FiniteSpace::empty(),
            FiniteSpace::point("x"),
            FiniteSpace::sierpinski(),
            FiniteSpace::discrete_numbered("p", 3),
        ] {
            let f = Frame::of_space(&sp, 64).unwrap();
            let (pts, iso) = points_of_frame(&f);
            let back = Frame::of_space(&pts, 64).unwrap();
            assert_eq!(iso.target(), &back);
            // The witness is an order isomorphism.
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.le(a, b), back.le(iso.apply(a), iso.apply(b)));
                }
            }
        }
    }

    // Random spaces: generated as random minimal-neighborhood preorders.
    fn arb_space(max_pts: usize) -> impl Strategy<Value = FiniteSpace> {
        (1..=max_pts).prop_flat_map(|n| {
            proptest::collection::vec(proptest::bits::u64::masked((1u64 << n) - 1), n).prop_map(
                move |raw| {
                    // Reflexive-transitive closure of the raw relation.
                    let mut m: Vec<u64> = raw
                        .iter()
                        .enumerate()
                        .map(|(i, &r)| r | 1u64 << i)
                        .collect();
                    loop {
                        let mut changed = false;
                        for i in 0..n {
                            let mut acc = m[i];
                            for j in points_in(m[i]) {
                                acc |= m[j];
                            }
                            if acc != m[i] {
                                m[i] = acc;
                                changed = true;
                            }
                        }
                        if !changed {
                            break;
                        }
                    }
                    let names = (0..n).map(|i| format!("r{i}")).collect();
                    FiniteSpace::from_min_nbhds(names, m).unwrap()
                },
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn frame_of_space_satisfies_frame_law(sp in arb_space(4)) {
            let f = Frame::of_space(&sp, 64).unwrap();
            prop_assert!(f.check_frame_law().is_ok());
        }

        #[test]
        fn right_adjoint_galois_and_meets(sp in arb_space(3), seed in any::<u64>()) {
            let f = Frame::of_space(&sp, 64).unwrap();
            // A pseudo-random join-preserving endomap: assign each
            // join-irreducible an element monotonically by meet-closing.
            let irr = f.join_irreducibles();
            let mut assign = vec![f.bottom(); f.len()];
            let mut s = seed;
            for &j in &irr {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let pick = (s >> 33) as usize % f.len();
                // Force monotonicity on irreducibles: join with images of
                // irreducibles below.
                let below = irr
                    .iter()
                    .filter(|&&k| f.le(k, j) && k != j)
                    .map(|&k| assign[k as usize]);
                assign[j as usize] = f.join_all(below.chain(std::iter::once(pick as Elt)));
            }
            let table: Vec<Elt> = f
                .elements()
                .map(|u| f.join_all(irr.iter().filter(|&&j| f.le(j, u)).map(|&j| assign[j as usize])))
                .collect();
            let sup = SupMap::new(f.clone(), f.clone(), table).unwrap();
            let adj = right_adjoint(&sup);
            prop_assert!(galois_witness(sup.as_map(), &adj).is_none());
            prop_assert!(adj.preserves_meets());
        }
    }
}
