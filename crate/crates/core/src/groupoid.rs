//! Finite topological groupoids: raw data, axiom checking, étale checks,
//! and the named example constructors used by the corpus.

use thiserror::Error;

use crate::space::{points_in, ContinuousMap, FiniteSpace, MapError, Pullback};
use crate::verdict::Verdict;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupoidError {
    #[error("structure map `{map}` has {got} entries, expected {want}")]
    WrongArity { map: &'static str, got: usize, want: usize },
    #[error("structure map `{map}` is out of range at index {at}")]
    OutOfRange { map: &'static str, at: usize },
    #[error("composition is defined on the non-composable pair ({g}, {h})")]
    CompOnNonComposable { g: String, h: String },
    #[error("composition is missing on the composable pair ({g}, {h})")]
    CompMissing { g: String, h: String },
    #[error("invalid group table: {0}")]
    BadGroup(String),
    #[error("invalid action table: {0}")]
    BadAction(String),
    #[error("constructed groupoid fails its own laws: {0}")]
    LawFailure(String),
    #[error(transparent)]
    Map(#[from] MapError),
}

/// A finite topological groupoid. The composition table is stored densely
/// and is `Some` exactly on the composable pairs (cod g = dom h), so
/// undefined compositions are unrepresentable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroupoid {
    pub objects: FiniteSpace,
    pub arrows: FiniteSpace,
    dom: Vec<usize>,
    cod: Vec<usize>,
    unit: Vec<usize>,
    inv: Vec<usize>,
    comp: Vec<Option<usize>>,
}

impl FiniteGroupoid {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        objects: FiniteSpace,
        arrows: FiniteSpace,
        dom: Vec<usize>,
        cod: Vec<usize>,
        unit: Vec<usize>,
        inv: Vec<usize>,
        comp: Vec<Option<usize>>,
    ) -> Result<Self, GroupoidError> {
        let n1 = arrows.n_points();
        let n0 = objects.n_points();
        let arity = |map: &'static str, got: usize, want: usize| {
            if got == want {
                Ok(())
            } else {
                Err(GroupoidError::WrongArity { map, got, want })
            }
        };
        arity("dom", dom.len(), n1)?;
        arity("cod", cod.len(), n1)?;
        arity("unit", unit.len(), n0)?;
        arity("inv", inv.len(), n1)?;
        arity("comp", comp.len(), n1 * n1)?;
        let range = |map: &'static str, v: &[usize], lim: usize| {
            match v.iter().position(|&x| x >= lim) {
                None => Ok(()),
                Some(at) => Err(GroupoidError::OutOfRange { map, at }),
            }
        };
        range("dom", &dom, n0)?;
        range("cod", &cod, n0)?;
        range("unit", &unit, n1)?;
        range("inv", &inv, n1)?;
        for g in 0..n1 {
            for h in 0..n1 {
                let entry = comp[g * n1 + h];
                let composable = cod[g] == dom[h];
                match entry {
                    Some(gh) if !composable => {
                        let _ = gh;
                        return Err(GroupoidError::CompOnNonComposable {
                            g: arrows.name(g).into(),
                            h: arrows.name(h).into(),
                        });
                    }
                    Some(gh) if gh >= n1 => {
                        return Err(GroupoidError::OutOfRange { map: "comp", at: g * n1 + h })
                    }
                    None if composable => {
                        return Err(GroupoidError::CompMissing {
                            g: arrows.name(g).into(),
                            h: arrows.name(h).into(),
                        })
                    }
                    _ => {}
                }
            }
        }
        Ok(FiniteGroupoid { objects, arrows, dom, cod, unit, inv, comp })
    }

    pub fn n_objects(&self) -> usize {
        self.objects.n_points()
    }

    pub fn n_arrows(&self) -> usize {
        self.arrows.n_points()
    }

    pub fn dom(&self, g: usize) -> usize {
        self.dom[g]
    }

    pub fn cod(&self, g: usize) -> usize {
        self.cod[g]
    }

    pub fn unit_of(&self, x: usize) -> usize {
        self.unit[x]
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inv[g]
    }

    pub fn compose(&self, g: usize, h: usize) -> Option<usize> {
        self.comp[g * self.n_arrows() + h]
    }

    pub fn composable_pairs(&self) -> Vec<(usize, usize)> {
        let n1 = self.n_arrows();
        (0..n1)
            .flat_map(|g| (0..n1).map(move |h| (g, h)))
            .filter(|&(g, h)| self.cod[g] == self.dom[h])
            .collect()
    }

    pub fn dom_map(&self) -> Result<ContinuousMap, MapError> {
        ContinuousMap::new(self.arrows.clone(), self.objects.clone(), self.dom.clone())
    }

    pub fn cod_map(&self) -> Result<ContinuousMap, MapError> {
        ContinuousMap::new(self.arrows.clone(), self.objects.clone(), self.cod.clone())
    }

    pub fn unit_map(&self) -> Result<ContinuousMap, MapError> {
        ContinuousMap::new(self.objects.clone(), self.arrows.clone(), self.unit.clone())
    }

    pub fn inv_map(&self) -> Result<ContinuousMap, MapError> {
        ContinuousMap::new(self.arrows.clone(), self.arrows.clone(), self.inv.clone())
    }

    /// The space of composable pairs: the pullback of cod and dom.
    pub fn composable_space(&self) -> Result<Pullback, MapError> {
        crate::space::pullback_space(&self.cod_map()?, &self.dom_map()?)
    }

    pub fn arrow_name(&self, g: usize) -> &str {
        self.arrows.name(g)
    }

    pub fn object_name(&self, x: usize) -> &str {
        self.objects.name(x)
    }
}

/// Verdict wrapper around the open-map criterion, naming the witness open.
pub fn is_open_map(f: &ContinuousMap) -> Verdict {
    match f.openness_witness() {
        None => Verdict::Pass,
        Some(open) => Verdict::fail(
            "open-map",
            format!(
                "image {} of the open {} is not open",
                f.target().render(f.image_mask(open)),
                f.source().render(open)
            ),
        ),
    }
}

/// Checks all groupoid laws, returning the first violating tuple and the
/// violated law's name.
pub fn check_groupoid(g: &FiniteGroupoid) -> Verdict {
    let n1 = g.n_arrows();
    let an = |i: usize| g.arrow_name(i).to_string();
    // Continuity of the five structure maps.
    for (name, res) in [
        ("continuity-dom", g.dom_map().err()),
        ("continuity-cod", g.cod_map().err()),
        ("continuity-unit", g.unit_map().err()),
        ("continuity-inv", g.inv_map().err()),
    ] {
        if let Some(e) = res {
            return Verdict::fail(name, e.to_string());
        }
    }
    // Composition continuous on the pullback topology.
    let pb = match g.composable_space() {
        Ok(pb) => pb,
        Err(e) => return Verdict::fail("continuity-comp", e.to_string()),
    };
    let comp_points: Vec<usize> = pb
        .pairs
        .iter()
        .map(|&(a, b)| g.compose(a, b).expect("pairs are composable"))
        .collect();
    if let Err(e) = ContinuousMap::new(pb.space.clone(), g.arrows.clone(), comp_points) {
        return Verdict::fail("continuity-comp", e.to_string());
    }
    // dom∘unit = cod∘unit = id.
    for x in 0..g.n_objects() {
        let u = g.unit_of(x);
        if g.dom(u) != x {
            return Verdict::fail("unit-section-dom", format!("dom(unit({})) ≠ {0}", g.object_name(x)));
        }
        if g.cod(u) != x {
            return Verdict::fail("unit-section-cod", format!("cod(unit({})) ≠ {0}", g.object_name(x)));
        }
    }
    // Compatibility of composition with dom and cod.
    for (a, b) in g.composable_pairs() {
        let ab = g.compose(a, b).unwrap();
        if g.dom(ab) != g.dom(a) {
            return Verdict::fail(
                "comp-dom-compat",
                format!("dom({}·{}) = {} ≠ {}", an(a), an(b), g.object_name(g.dom(ab)), g.object_name(g.dom(a))),
            );
        }
        if g.cod(ab) != g.cod(b) {
            return Verdict::fail(
                "comp-cod-compat",
                format!("cod({}·{}) = {} ≠ {}", an(a), an(b), g.object_name(g.cod(ab)), g.object_name(g.cod(b))),
            );
        }
    }
    // Associativity on all composable triples.
    for (a, b) in g.composable_pairs() {
        let ab = g.compose(a, b).unwrap();
        for c in 0..n1 {
            if g.cod(b) != g.dom(c) {
                continue;
            }
            let bc = g.compose(b, c).unwrap();
            if g.compose(ab, c) != g.compose(a, bc) {
                return Verdict::fail(
                    "comp-associativity",
                    format!("({}·{})·{} ≠ {}·({}·{})", an(a), an(b), an(c), an(a), an(b), an(c)),
                );
            }
        }
    }
    // Unit laws.
    for a in 0..n1 {
        if g.compose(a, g.unit_of(g.cod(a))) != Some(a) {
            return Verdict::fail("unit-law-right", format!("{}·unit(cod) ≠ {}", an(a), an(a)));
        }
        if g.compose(g.unit_of(g.dom(a)), a) != Some(a) {
            return Verdict::fail("unit-law-left", format!("unit(dom)·{} ≠ {}", an(a), an(a)));
        }
    }
    // Inverse laws.
    for a in 0..n1 {
        let i = g.inverse(a);
        if g.compose(a, i) != Some(g.unit_of(g.dom(a))) {
            return Verdict::fail("inverse-law-right", format!("{}·{}⁻ ≠ unit(dom {})", an(a), an(a), an(a)));
        }
        if g.compose(i, a) != Some(g.unit_of(g.cod(a))) {
            return Verdict::fail("inverse-law-left", format!("{}⁻·{} ≠ unit(cod {})", an(a), an(a), an(a)));
        }
    }
    Verdict::Pass
}

/// Étale check: every arrow has an open neighborhood on which dom restricts
/// to a homeomorphism onto an open subset of the object space.
/// Cross-checked against the equivalent condition that dom and unit are both
/// open maps; a disagreement is an internal consistency failure.
pub fn is_etale(g: &FiniteGroupoid) -> Verdict {
    let dom_map = match g.dom_map() {
        Ok(m) => m,
        Err(e) => return Verdict::fail("etale", format!("dom not continuous: {e}")),
    };
    let unit_map = match g.unit_map() {
        Ok(m) => m,
        Err(e) => return Verdict::fail("etale", format!("unit not continuous: {e}")),
    };
    let local_homeo = dom_map.is_local_homeo();
    let both_open = dom_map.is_open() && unit_map.is_open();
    if local_homeo != both_open {
        return Verdict::fail(
            "etale-crosscheck",
            format!("local-homeo criterion = {local_homeo}, open-dom-and-unit criterion = {both_open}"),
        );
    }
    if local_homeo {
        Verdict::Pass
    } else {
        let bad = (0..g.n_arrows())
            .find(|&a| {
                let m = g.arrows.min_nbhd(a);
                let mut seen = std::collections::BTreeSet::new();
                !points_in(m).all(|x| seen.insert(g.dom(x)))
                    || !g.objects.is_open(dom_map.image_mask(m))
            })
            .map(|a| g.arrow_name(a).to_string())
            .unwrap_or_else(|| "(no single-arrow witness)".to_string());
        Verdict::fail("etale", format!("no étale neighborhood around arrow {bad}"))
    }
}

/// A finite group presented by its multiplication table. Element 0 is the
/// identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    pub names: Vec<String>,
    mult: Vec<usize>,
}

impl GroupTable {
    pub fn new(names: Vec<String>, mult: Vec<usize>) -> Result<Self, GroupoidError> {
        let n = names.len();
        if mult.len() != n * n {
            return Err(GroupoidError::BadGroup(format!(
                "table has {} entries for {n} elements",
                mult.len()
            )));
        }
        if n == 0 {
            return Err(GroupoidError::BadGroup("empty group".into()));
        }
        if mult.iter().any(|&x| x >= n) {
            return Err(GroupoidError::BadGroup("entry out of range".into()));
        }
        let t = GroupTable { names, mult };
        for a in 0..n {
            if t.mul(0, a) != a || t.mul(a, 0) != a {
                return Err(GroupoidError::BadGroup("element 0 is not an identity".into()));
            }
        }
        for a in 0..n {
            if !(0..n).any(|b| t.mul(a, b) == 0 && t.mul(b, a) == 0) {
                return Err(GroupoidError::BadGroup(format!("no inverse for {}", t.names[a])));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if t.mul(t.mul(a, b), c) != t.mul(a, t.mul(b, c)) {
                        return Err(GroupoidError::BadGroup("not associative".into()));
                    }
                }
            }
        }
        Ok(t)
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order() + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order()).find(|&b| self.mul(a, b) == 0).unwrap()
    }

    pub fn trivial() -> Self {
        GroupTable { names: vec!["1".into()], mult: vec![0] }
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let names = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g{i}"),
            })
            .collect();
        let mult = (0..n).flat_map(|a| (0..n).map(move |b| (a + b) % n)).collect();
        GroupTable { names, mult }
    }

    pub fn klein_four() -> Self {
        let names = vec!["1".into(), "a".into(), "b".into(), "c".into()];
        #[rustfmt::skip]
        let mult = vec![
            0, 1, 2, 3,
            1, 0, 3, 2,
            2, 3, 0, 1,
            3, 2, 1, 0,
        ];
        GroupTable { names, mult }
    }
}

/// Named groupoid constructors. Every kind yields a groupoid that passes
/// `check_groupoid` and `is_etale`; bad parameters are rejected.
#[derive(Debug, Clone)]
pub enum NamedGroupoid {
    IdentityOnSpace(FiniteSpace),
    DiscreteGroup(GroupTable),
    Pair(usize),
    DisjointSum(Box<NamedGroupoid>, Box<NamedGroupoid>),
    ProductWithGroup(Box<NamedGroupoid>, GroupTable),
    /// A group acting on a finite discrete set; `action[h][s]` is h·s.
    ActionGroupoid(GroupTable, Vec<Vec<usize>>),
}

pub fn make_named(kind: &NamedGroupoid) -> Result<FiniteGroupoid, GroupoidError> {
    let g = build_named(kind)?;
    if let Verdict::Fail(v) = check_groupoid(&g) {
        return Err(GroupoidError::LawFailure(v.to_string()));
    }
    if let Verdict::Fail(v) = is_etale(&g) {
        return Err(GroupoidError::LawFailure(v.to_string()));
    }
    Ok(g)
}

fn build_named(kind: &NamedGroupoid) -> Result<FiniteGroupoid, GroupoidError> {
    match kind {
        NamedGroupoid::IdentityOnSpace(space) => {
            let n = space.n_points();
            let id: Vec<usize> = (0..n).collect();
            let comp = (0..n)
                .flat_map(|g| (0..n).map(move |h| if g == h { Some(g) } else { None }))
                .collect();
            FiniteGroupoid::new(space.clone(), space.clone(), id.clone(), id.clone(), id.clone(), id, comp)
        }
        NamedGroupoid::DiscreteGroup(t) => {
            let n = t.order();
            let objects = FiniteSpace::point("*");
            let arrows = FiniteSpace::discrete(t.names.clone());
            let comp = (0..n * n).map(|k| Some(t.mul(k / n, k % n))).collect();
            let inv = (0..n).map(|a| t.inverse(a)).collect();
            FiniteGroupoid::new(objects, arrows, vec![0; n], vec![0; n], vec![0], inv, comp)
        }
        NamedGroupoid::Pair(n) => {
            let n = *n;
            let objects = FiniteSpace::discrete((1..=n).map(|i| i.to_string()).collect());
            let arrows = FiniteSpace::discrete(
                (1..=n)
                    .flat_map(|i| (1..=n).map(move |j| format!("({i},{j})")))
                    .collect(),
            );
            // Arrow i*n+j is (i+1, j+1): dom = i, cod = j.
            let dom = (0..n * n).map(|a| a / n).collect();
            let cod = (0..n * n).map(|a| a % n).collect();
            let unit = (0..n).map(|x| x * n + x).collect();
            let inv = (0..n * n).map(|a| (a % n) * n + a / n).collect();
            let m = n * n;
            let comp = (0..m)
                .flat_map(|g| {
                    (0..m).map(move |h| {
                        if g % n == h / n {
                            Some((g / n) * n + h % n)
                        } else {
                            None
                        }
                    })
                })
                .collect();
            FiniteGroupoid::new(objects, arrows, dom, cod, unit, inv, comp)
        }
        NamedGroupoid::DisjointSum(a, b) => {
            let ga = build_named(a)?;
            let gb = build_named(b)?;
            disjoint_sum(&ga, &gb)
        }
        NamedGroupoid::ProductWithGroup(a, t) => {
            let ga = build_named(a)?;
            product_with_group(&ga, t)
        }
        NamedGroupoid::ActionGroupoid(t, action) => action_groupoid(t, action),
    }
}

pub fn disjoint_sum(a: &FiniteGroupoid, b: &FiniteGroupoid) -> Result<FiniteGroupoid, GroupoidError> {
    let prefix = |sp: &FiniteSpace, tag: &str| {
        FiniteSpace::from_min_nbhds(
            sp.names().iter().map(|n| format!("{tag}{n}")).collect(),
            (0..sp.n_points()).map(|x| sp.min_nbhd(x)).collect(),
        )
        .expect("renaming preserves validity")
    };
    let shift = |sp: &FiniteSpace, by: usize| -> Vec<crate::space::PointSet> {
        (0..sp.n_points()).map(|x| sp.min_nbhd(x) << by).collect()
    };
    let o0 = prefix(&a.objects, "l:");
    let o1 = prefix(&b.objects, "r:");
    let mut onames = o0.names().to_vec();
    onames.extend_from_slice(o1.names());
    let mut onbhd = shift(&a.objects, 0);
    onbhd.extend(shift(&b.objects, a.n_objects()));
    let objects = FiniteSpace::from_min_nbhds(onames, onbhd).map_err(MapError::Space)?;
    let a0 = prefix(&a.arrows, "l:");
    let a1 = prefix(&b.arrows, "r:");
    let mut anames = a0.names().to_vec();
    anames.extend_from_slice(a1.names());
    let mut anbhd = shift(&a.arrows, 0);
    anbhd.extend(shift(&b.arrows, a.n_arrows()));
    let arrows = FiniteSpace::from_min_nbhds(anames, anbhd).map_err(MapError::Space)?;
    let (na, nb) = (a.n_arrows(), b.n_arrows());
    let n1 = na + nb;
    let dom = (0..n1)
        .map(|g| if g < na { a.dom(g) } else { b.dom(g - na) + a.n_objects() })
        .collect();
    let cod = (0..n1)
        .map(|g| if g < na { a.cod(g) } else { b.cod(g - na) + a.n_objects() })
        .collect();
    let unit = (0..objects.n_points())
        .map(|x| if x < a.n_objects() { a.unit_of(x) } else { b.unit_of(x - a.n_objects()) + na })
        .collect();
    let inv = (0..n1)
        .map(|g| if g < na { a.inverse(g) } else { b.inverse(g - na) + na })
        .collect();
    let comp = (0..n1)
        .flat_map(|g| {
            (0..n1).map(move |h| match (g < na, h < na) {
                (true, true) => a.compose(g, h),
                (false, false) => b.compose(g - na, h - na).map(|x| x + na),
                _ => None,
            })
        })
        .collect();
    FiniteGroupoid::new(objects, arrows, dom, cod, unit, inv, comp)
}

fn product_with_group(a: &FiniteGroupoid, t: &GroupTable) -> Result<FiniteGroupoid, GroupoidError> {
    let k = t.order();
    let n1 = a.n_arrows() * k;
    let names = (0..a.n_arrows())
        .flat_map(|g| (0..k).map(move |h| (g, h)))
        .map(|(g, h)| format!("({},{})", a.arrow_name(g), t.names[h]))
        .collect();
    let nbhd = (0..a.n_arrows())
        .flat_map(|g| (0..k).map(move |h| (g, h)))
        .map(|(g, h)| {
            points_in(a.arrows.min_nbhd(g)).fold(0u64, |acc, g2| acc | 1u64 << (g2 * k + h))
        })
        .collect();
    let arrows = FiniteSpace::from_min_nbhds(names, nbhd).map_err(MapError::Space)?;
    let dom = (0..n1).map(|gh| a.dom(gh / k)).collect();
    let cod = (0..n1).map(|gh| a.cod(gh / k)).collect();
    let unit = (0..a.n_objects()).map(|x| a.unit_of(x) * k).collect();
    let inv = (0..n1).map(|gh| a.inverse(gh / k) * k + t.inverse(gh % k)).collect();
    let comp = (0..n1)
        .flat_map(|x| {
            (0..n1).map(move |y| (x, y))
        })
        .map(|(x, y)| {
            let (g, h) = (x / k, x % k);
            let (g2, h2) = (y / k, y % k);
            a.compose(g, g2).map(|gg| gg * k + t.mul(h, h2))
        })
        .collect();
    FiniteGroupoid::new(a.objects.clone(), arrows, dom, cod, unit, inv, comp)
}

fn action_groupoid(t: &GroupTable, action: &[Vec<usize>]) -> Result<FiniteGroupoid, GroupoidError> {
    let k = t.order();
    if action.len() != k {
        return Err(GroupoidError::BadAction(format!("{} rows for a group of order {k}", action.len())));
    }
    let m = action.first().map(|r| r.len()).unwrap_or(0);
    if m == 0 || action.iter().any(|r| r.len() != m) {
        return Err(GroupoidError::BadAction("ragged or empty action table".into()));
    }
    if action.iter().any(|r| r.iter().any(|&s| s >= m)) {
        return Err(GroupoidError::BadAction("entry out of range".into()));
    }
    for s in 0..m {
        if action[0][s] != s {
            return Err(GroupoidError::BadAction("identity does not act trivially".into()));
        }
    }
    for h in 0..k {
        for h2 in 0..k {
            for s in 0..m {
                if action[t.mul(h2, h)][s] != action[h2][action[h][s]] {
                    return Err(GroupoidError::BadAction("not a left action".into()));
                }
            }
        }
    }
    let objects = FiniteSpace::discrete_numbered("s", m);
    let names = (0..k)
        .flat_map(|h| (0..m).map(move |s| (h, s)))
        .map(|(h, s)| format!("({},s{})", t.names[h], s))
        .collect();
    let arrows = FiniteSpace::discrete(names);
    let n1 = k * m;
    // Arrow h*m+s goes from s to h·s.
    let dom = (0..n1).map(|a| a % m).collect();
    let cod = (0..n1).map(|a| action[a / m][a % m]).collect();
    let unit = (0..m).collect();
    let inv = (0..n1)
        .map(|a| {
            let (h, s) = (a / m, a % m);
            t.inverse(h) * m + action[h][s]
        })
        .collect();
    let comp = (0..n1)
        .flat_map(|x| (0..n1).map(move |y| (x, y)))
        .map(|(x, y)| {
            let (h, s) = (x / m, x % m);
            let (h2, s2) = (y / m, y % m);
            if action[h][s] == s2 {
                Some(t.mul(h2, h) * m + s)
            } else {
                None
            }
        })
        .collect();
    FiniteGroupoid::new(objects, arrows, dom, cod, unit, inv, comp)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn z2() -> FiniteGroupoid {
        make_named(&NamedGroupoid::DiscreteGroup(GroupTable::cyclic(2))).unwrap()
    }

    pub(crate) fn pair2() -> FiniteGroupoid {
        make_named(&NamedGroupoid::Pair(2)).unwrap()
    }

    #[test]
    fn identity_groupoid_on_sierpinski_passes() {
        let g = make_named(&NamedGroupoid::IdentityOnSpace(FiniteSpace::sierpinski())).unwrap();
        assert!(check_groupoid(&g).is_pass());
        assert!(is_etale(&g).is_pass());
    }

    #[test]
    fn empty_groupoid_passes_vacuously() {
        let g = make_named(&NamedGroupoid::IdentityOnSpace(FiniteSpace::empty())).unwrap();
        assert!(check_groupoid(&g).is_pass());
        assert!(is_etale(&g).is_pass());
    }

    #[test]
    fn pair_groupoid_on_two_points_passes() {
        let g = pair2();
        assert!(check_groupoid(&g).is_pass());
        assert_eq!(g.composable_pairs().len(), 8);
        // comp((1,2),(2,1)) = (1,1)
        let a = g.arrows.point_index("(1,2)").unwrap();
        let b = g.arrows.point_index("(2,1)").unwrap();
        let e1 = g.arrows.point_index("(1,1)").unwrap();
        assert_eq!(g.compose(a, b), Some(e1));
    }

    #[test]
    fn corrupted_pair_composition_fails_dom_compat() {
        let g = pair2();
        let a = g.arrows.point_index("(1,2)").unwrap();
        let b = g.arrows.point_index("(2,1)").unwrap();
        let bad = g.arrows.point_index("(2,2)").unwrap();
        let mut comp = g.comp.clone();
        comp[a * 4 + b] = Some(bad);
        let g2 = FiniteGroupoid::new(
            g.objects.clone(),
            g.arrows.clone(),
            g.dom.clone(),
            g.cod.clone(),
            g.unit.clone(),
            g.inv.clone(),
            comp,
        )
        .unwrap();
        match check_groupoid(&g2) {
            Verdict::Fail(v) => assert_eq!(v.law, "comp-dom-compat"),
            other => panic!("expected failure, got {other:?}"),
        }
    }

    #[test]
    fn z2_is_a_two_arrow_group() {
        let g = z2();
        assert_eq!(g.n_objects(), 1);
        assert_eq!(g.n_arrows(), 2);
        let gg = g.arrows.point_index("g").unwrap();
        assert_eq!(g.compose(gg, gg), Some(0));
        assert_eq!(g.inverse(gg), gg);
    }

    #[test]
    fn indiscrete_arrow_topology_is_not_etale() {
        // Two objects, arrows = units only, but with G1 indiscrete while G0
        // is discrete: unit is not open and dom is not a local homeo.
        let objects = FiniteSpace::discrete_numbered("x", 2);
        let arrows = FiniteSpace::indiscrete(vec!["u0".into(), "u1".into()]);
        let comp = vec![Some(0), None, None, Some(1)];
        let g = FiniteGroupoid::new(objects, arrows, vec![0, 1], vec![0, 1], vec![0, 1], vec![0, 1], comp)
            .unwrap();
        // dom: indiscrete -> discrete is not even continuous, so the
        // groupoid checker already rejects it.
        assert!(!check_groupoid(&g).is_pass());
        // Swap topologies to get a genuinely étale-failing but valid
        // groupoid: G0 indiscrete, G1 indiscrete, unit map continuous.
        let objects = FiniteSpace::indiscrete(vec!["x0".into(), "x1".into()]);
        let arrows = FiniteSpace::indiscrete(vec!["u0".into(), "u1".into()]);
        let comp = vec![Some(0), None, None, Some(1)];
        let g = FiniteGroupoid::new(objects, arrows, vec![0, 1], vec![0, 1], vec![0, 1], vec![0, 1], comp)
            .unwrap();
        assert!(check_groupoid(&g).is_pass());
        match is_etale(&g) {
            Verdict::Fail(v) => assert_eq!(v.law, "etale"),
            other => panic!("expected étale failure, got {other:?}"),
        }
    }

    #[test]
    fn discrete_groupoids_are_etale() {
        for g in [z2(), pair2()] {
            assert!(is_etale(&g).is_pass());
        }
    }

    #[test]
    fn named_constructors_produce_valid_groupoids() {
        let sum = NamedGroupoid::DisjointSum(
            Box::new(NamedGroupoid::DiscreteGroup(GroupTable::cyclic(2))),
            Box::new(NamedGroupoid::Pair(2)),
        );
        let g = make_named(&sum).unwrap();
        assert_eq!(g.n_arrows(), 6);
        assert_eq!(g.n_objects(), 3);

        let prod = NamedGroupoid::ProductWithGroup(
            Box::new(NamedGroupoid::Pair(2)),
            GroupTable::cyclic(2),
        );
        let g = make_named(&prod).unwrap();
        assert_eq!(g.n_arrows(), 8);
        assert!(check_groupoid(&g).is_pass());

        // Z2 acting on two points by swap: the action groupoid has 4 arrows.
        let act = NamedGroupoid::ActionGroupoid(GroupTable::cyclic(2), vec![vec![0, 1], vec![1, 0]]);
        let g = make_named(&act).unwrap();
        assert_eq!(g.n_arrows(), 4);
        assert_eq!(g.n_objects(), 2);
    }

    #[test]
    fn bad_group_and_action_tables_are_rejected()  {
        assert!(GroupTable::new(vec!["1".into(), "g".into()], vec![0, 1, 1, 1]).is_err());
        let bad_action =
            NamedGroupoid::ActionGroupoid(GroupTable::cyclic(2), vec![vec![1, 0], vec![0, 1]]);
        assert!(make_named(&bad_action).is_err());
    }

    #[test]
    fn klein_four_is_a_group() {
        let t = GroupTable::klein_four();
        assert_eq!(t.order(), 4);
        let g = make_named(&NamedGroupoid::DiscreteGroup(t)).unwrap();
        assert!(check_groupoid(&g).is_pass());
    }

    #[test]
    fn composable_space_of_pair2_has_eight_points() {
        let g = pair2();
        let pb = g.composable_space().unwrap();
        assert_eq!(pb.pairs.len(), 8);
    }
}
