//! Chain complexes over the active ring, with chain maps, homotopies and
//! 2-homotopies, their validation, and homology.
//!
//! Conventions. A homotopy α: f ≃ g has components α_n: A_n → B_{n+1}
//! satisfying −f_n + g_n = α_{n−1}∂_n + ∂_{n+1}α_n. A 2-homotopy Λ between
//! parallel homotopies α ≃₂ α′ has components Λ_n: A_n → B_{n+2} with
//! α′_n − α_n = ∂_{n+2}Λ_n − Λ_{n−1}∂_n.

use crate::matrix::Matrix;
use crate::module::{
    lift_through, module_cokernel, module_kernel, InvariantFactors, ModuleMap, PresentedModule,
};
use crate::ring::Ring;
use std::collections::BTreeMap;
use std::fmt;

/// A violated identity, located by degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub degree: i64,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "degree {}: {}", self.degree, self.message)
    }
}

fn fail(degree: i64, message: impl Into<String>) -> Diagnostic {
    Diagnostic { degree, message: message.into() }
}

#[derive(Clone, PartialEq, Debug)]
pub struct ChainComplex {
    ring: Ring,
    components: BTreeMap<i64, PresentedModule>,
    differentials: BTreeMap<i64, Matrix>,
}

impl ChainComplex {
    /// Build and validate: shapes line up, each differential is a
    /// well-defined module map, and ∂∂ = 0.
    pub fn new(
        ring: Ring,
        components: BTreeMap<i64, PresentedModule>,
        differentials: BTreeMap<i64, Matrix>,
    ) -> Result<ChainComplex, Vec<Diagnostic>> {
        let c = ChainComplex::new_unvalidated(ring, components, differentials);
        let diags = c.diagnostics();
        if diags.is_empty() {
            Ok(c)
        } else {
            Err(diags)
        }
    }

    /// Normalize without checking ∂∂ = 0. Shapes must still line up.
    pub(crate) fn new_unvalidated(
        ring: Ring,
        components: BTreeMap<i64, PresentedModule>,
        differentials: BTreeMap<i64, Matrix>,
    ) -> ChainComplex {
        let components: BTreeMap<i64, PresentedModule> = components
            .into_iter()
            .filter(|(_, m)| m.generators() > 0)
            .collect();
        let mut kept = BTreeMap::new();
        for (n, d) in differentials {
            let rows = components.get(&(n - 1)).map_or(0, |m| m.generators());
            let cols = components.get(&n).map_or(0, |m| m.generators());
            if rows == 0 || cols == 0 {
                assert!(
                    d.rows() == rows || d.cols() == cols || d.is_zero(),
                    "differential at degree {n} touches a zero module but is nonzero"
                );
                continue;
            }
            assert_eq!((d.rows(), d.cols()), (rows, cols), "differential shape at degree {n}");
            if !d.is_zero() {
                kept.insert(n, d);
            }
        }
        ChainComplex { ring, components, differentials: kept }
    }

    /// Complex of free modules from ranks; `diffs[i]` is ∂ from degree
    /// `lo + i + 1` to `lo + i`.
    pub fn from_ranks(ring: Ring, lo: i64, ranks: &[usize], diffs: &[Matrix]) -> Result<ChainComplex, Vec<Diagnostic>> {
        assert!(diffs.len() + 1 == ranks.len() || ranks.is_empty() && diffs.is_empty());
        let mut components = BTreeMap::new();
        for (i, &r) in ranks.iter().enumerate() {
            components.insert(lo + i as i64, PresentedModule::free(ring, r));
        }
        let mut differentials = BTreeMap::new();
        for (i, d) in diffs.iter().enumerate() {
            differentials.insert(lo + i as i64 + 1, d.clone());
        }
        ChainComplex::new(ring, components, differentials)
    }

    pub fn empty(ring: Ring) -> ChainComplex {
        ChainComplex { ring, components: BTreeMap::new(), differentials: BTreeMap::new() }
    }

    pub fn concentrated(ring: Ring, degree: i64, module: PresentedModule) -> ChainComplex {
        let mut components = BTreeMap::new();
        components.insert(degree, module);
        ChainComplex::new_unvalidated(ring, components, BTreeMap::new())
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn support(&self) -> Option<(i64, i64)> {
        let lo = *self.components.keys().next()?;
        let hi = *self.components.keys().next_back()?;
        Some((lo, hi))
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn component(&self, n: i64) -> PresentedModule {
        self.components.get(&n).cloned().unwrap_or_else(|| PresentedModule::zero(self.ring))
    }

    pub fn rank(&self, n: i64) -> usize {
        self.components.get(&n).map_or(0, |m| m.generators())
    }

    pub fn differential_matrix(&self, n: i64) -> Matrix {
        self.differentials
            .get(&n)
            .cloned()
            .unwrap_or_else(|| Matrix::zero(self.ring, self.rank(n - 1), self.rank(n)))
    }

    pub fn differential(&self, n: i64) -> ModuleMap {
        ModuleMap::new(self.component(n), self.component(n - 1), self.differential_matrix(n))
            .expect("stored differential is well-defined")
    }

    /// Degrees that carry a nonzero component.
    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.components.keys().copied()
    }

    pub fn all_components_free(&self) -> bool {
        self.components.values().all(|m| m.is_free_presentation())
    }

    pub fn diagnostics(&self) -> Vec<Diagnostic> {
        let mut out = Vec::new();
        let Some((lo, hi)) = self.support() else {
            return out;
        };
        for n in lo..=hi + 1 {
            let d = self.differential_matrix(n);
            match ModuleMap::new(self.component(n), self.component(n - 1), d) {
                Ok(dn) => {
                    if n > lo {
                        let dprev = self.differential(n - 1);
                        if !dprev.compose(&dn).is_zero_map() {
                            out.push(fail(n, "differential composite is nonzero"));
                        }
                    }
                }
                Err(e) => out.push(fail(n, format!("differential is not well-defined: {e}"))),
            }
        }
        out
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct ChainMap {
    source: ChainComplex,
    target: ChainComplex,
    components: BTreeMap<i64, Matrix>,
}

impl ChainMap {
    pub fn new(
        source: ChainComplex,
        target: ChainComplex,
        components: BTreeMap<i64, Matrix>,
    ) -> Result<ChainMap, Vec<Diagnostic>> {
        let f = ChainMap::new_unvalidated(source, target, components);
        let diags = f.diagnostics();
        if diags.is_empty() {
            Ok(f)
        } else {
            Err(diags)
        }
    }

    pub(crate) fn new_unvalidated(
        source: ChainComplex,
        target: ChainComplex,
        components: BTreeMap<i64, Matrix>,
    ) -> ChainMap {
        let kept: BTreeMap<i64, Matrix> = components
            .into_iter()
            .filter(|(n, m)| {
                let rows = target.rank(*n);
                let cols = source.rank(*n);
                if rows == 0 || cols == 0 {
                    assert!(
                        m.rows() == rows || m.cols() == cols || m.is_zero(),
                        "chain map component at degree {n} touches a zero module but is nonzero"
                    );
                    return false;
                }
                assert_eq!((m.rows(), m.cols()), (rows, cols), "chain map component shape at degree {n}");
                !m.is_zero()
            })
            .collect();
        ChainMap { source, target, components: kept }
    }

    pub fn identity(c: &ChainComplex) -> ChainMap {
        let comps = c
            .degrees()
            .map(|n| (n, Matrix::identity(c.ring(), c.rank(n))))
            .collect();
        ChainMap::new_unvalidated(c.clone(), c.clone(), comps)
    }

    pub fn zero(source: &ChainComplex, target: &ChainComplex) -> ChainMap {
        ChainMap::new_unvalidated(source.clone(), target.clone(), BTreeMap::new())
    }

    pub fn source(&self) -> &ChainComplex {
        &self.source
    }

    pub fn target(&self) -> &ChainComplex {
        &self.target
    }

    pub fn ring(&self) -> Ring {
        self.source.ring()
    }

    pub fn component(&self, n: i64) -> Matrix {
        self.components
            .get(&n)
            .cloned()
            .unwrap_or_else(|| Matrix::zero(self.ring(), self.target.rank(n), self.source.rank(n)))
    }

    pub fn component_map(&self, n: i64) -> ModuleMap {
        ModuleMap::new(self.source.component(n), self.target.component(n), self.component(n))
            .expect("validated chain map component")
    }

    pub fn components(&self) -> &BTreeMap<i64, Matrix> {
        &self.components
    }

    fn degree_window(&self) -> Option<(i64, i64)> {
        let (slo, shi) = self.source.support()?;
        match self.target.support() {
            Some((tlo, thi)) => Some((slo.min(tlo), shi.max(thi))),
            None => Some((slo, shi)),
        }
    }

    pub fn diagnostics(&self) -> Vec<Diagnostic> {
        let mut out = Vec::new();
        if self.source.ring() != self.target.ring() {
            out.push(fail(0, "source and target rings differ"));
            return out;
        }
        let Some((lo, hi)) = self.degree_window() else {
            return out;
        };
        for n in lo..=hi {
            let fm = ModuleMap::new(self.source.component(n), self.target.component(n), self.component(n));
            match fm {
                Ok(fn_map) => {
                    // ∂ f = f ∂
                    let fprev = ModuleMap::new(
                        self.source.component(n - 1),
                        self.target.component(n - 1),
                        self.component(n - 1),
                    );
                    if let Ok(fprev) = fprev {
                        let lhs = self.target.differential(n).compose(&fn_map);
                        let rhs = fprev.compose(&self.source.differential(n));
                        if !lhs.eq_as_maps(&rhs) {
                            out.push(fail(n, "chain map does not commute with differentials"));
                        }
                    }
                }
                Err(e) => out.push(fail(n, format!("component is not well-defined: {e}"))),
            }
        }
        out
    }

    /// self ∘ other.
    pub fn compose(&self, other: &ChainMap) -> ChainMap {
        assert_eq!(&self.source, other.target(), "chain map composition mismatch");
        let comps = self
            .components
            .keys()
            .chain(other.components.keys())
            .copied()
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .map(|n| (n, self.component(n).mul(&other.component(n))))
            .collect();
        ChainMap::new_unvalidated(other.source().clone(), self.target.clone(), comps)
    }

    pub fn add(&self, other: &ChainMap) -> ChainMap {
        assert_eq!(self.source, other.source);
        assert_eq!(self.target, other.target);
        let comps = self
            .components
            .keys()
            .chain(other.components.keys())
            .copied()
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .map(|n| (n, self.component(n).add(&other.component(n))))
            .collect();
        ChainMap::new_unvalidated(self.source.clone(), self.target.clone(), comps)
    }

    pub fn neg(&self) -> ChainMap {
        let comps = self.components.iter().map(|(n, m)| (*n, m.neg())).collect();
        ChainMap::new_unvalidated(self.source.clone(), self.target.clone(), comps)
    }

    pub fn sub(&self, other: &ChainMap) -> ChainMap {
        self.add(&other.neg())
    }

    /// Equality as graded module maps (componentwise, modulo relations).
    pub fn eq_as_maps(&self, other: &ChainMap) -> bool {
        if self.source != other.source || self.target != other.target {
            return false;
        }
        let degrees: std::collections::BTreeSet<i64> = self
            .components
            .keys()
            .chain(other.components.keys())
            .copied()
            .collect();
        degrees
            .into_iter()
            .all(|n| self.component_map(n).eq_as_maps(&other.component_map(n)))
    }

    pub fn is_zero_map(&self) -> bool {
        self.eq_as_maps(&ChainMap::zero(&self.source, &self.target))
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct Homotopy {
    from: ChainMap,
    to: ChainMap,
    components: BTreeMap<i64, Matrix>,
}

impl Homotopy {
    pub fn new(
        from: ChainMap,
        to: ChainMap,
        components: BTreeMap<i64, Matrix>,
    ) -> Result<Homotopy, Vec<Diagnostic>> {
        let h = Homotopy::new_unvalidated(from, to, components);
        let diags = h.diagnostics();
        if diags.is_empty() {
            Ok(h)
        } else {
            Err(diags)
        }
    }

    pub(crate) fn new_unvalidated(
        from: ChainMap,
        to: ChainMap,
        components: BTreeMap<i64, Matrix>,
    ) -> Homotopy {
        assert_eq!(from.source(), to.source(), "homotopy endpoints must be parallel");
        assert_eq!(from.target(), to.target(), "homotopy endpoints must be parallel");
        let src = from.source().clone();
        let tgt = from.target().clone();
        let kept: BTreeMap<i64, Matrix> = components
            .into_iter()
            .filter(|(n, m)| {
                let rows = tgt.rank(*n + 1);
                let cols = src.rank(*n);
                if rows == 0 || cols == 0 {
                    assert!(
                        m.rows() == rows || m.cols() == cols || m.is_zero(),
                        "homotopy component at degree {n} touches a zero module but is nonzero"
                    );
                    return false;
                }
                assert_eq!((m.rows(), m.cols()), (rows, cols), "homotopy component shape at degree {n}");
                !m.is_zero()
            })
            .collect();
        Homotopy { from, to, components: kept }
    }

    /// The trivial homotopy f ≃ f.
    pub fn trivial(f: &ChainMap) -> Homotopy {
        Homotopy::new_unvalidated(f.clone(), f.clone(), BTreeMap::new())
    }

    /// A nullhomotopy 0 ≃ f.
    pub fn nullhomotopy(
        f: &ChainMap,
        components: BTreeMap<i64, Matrix>,
    ) -> Result<Homotopy, Vec<Diagnostic>> {
        Homotopy::new(ChainMap::zero(f.source(), f.target()), f.clone(), components)
    }

    pub fn from_map(&self) -> &ChainMap {
        &self.from
    }

    pub fn to_map(&self) -> &ChainMap {
        &self.to
    }

    pub fn source(&self) -> &ChainComplex {
        self.from.source()
    }

    pub fn target(&self) -> &ChainComplex {
        self.from.target()
    }

    pub fn ring(&self) -> Ring {
        self.from.ring()
    }

    pub fn component(&self, n: i64) -> Matrix {
        self.components.get(&n).cloned().unwrap_or_else(|| {
            Matrix::zero(self.ring(), self.target().rank(n + 1), self.source().rank(n))
        })
    }

    pub fn components(&self) -> &BTreeMap<i64, Matrix> {
        &self.components
    }

    pub fn is_nullhomotopy(&self) -> bool {
        self.from.is_zero_map()
    }

    pub fn diagnostics(&self) -> Vec<Diagnostic> {
        let mut out = Vec::new();
        out.extend(self.from.diagnostics());
        out.extend(self.to.diagnostics());
        if !out.is_empty() {
            return out;
        }
        let src = self.from.source();
        let tgt = self.from.target();
        let window = {
            let mut degs: Vec<i64> = Vec::new();
            if let Some((lo, hi)) = src.support() {
                degs.extend(lo - 1..=hi + 1);
            }
            degs
        };
        for n in window {
            if src.rank(n) == 0 || tgt.rank(n) == 0 {
                continue;
            }
            let alpha_n = ModuleMap::new(src.component(n), tgt.component(n + 1), self.component(n));
            let alpha_prev =
                ModuleMap::new(src.component(n - 1), tgt.component(n), self.component(n - 1));
            match (alpha_n, alpha_prev) {
                (Ok(an), Ok(aprev)) => {
                    // −f + g = α∂ + ∂α
                    let lhs = self.to.component_map(n).add(&self.from.component_map(n).neg());
                    let rhs = aprev
                        .compose(&src.differential(n))
                        .add(&tgt.differential(n + 1).compose(&an));
                    if !lhs.eq_as_maps(&rhs) {
                        out.push(fail(n, "homotopy identity fails"));
                    }
                }
                (Err(e), _) | (_, Err(e)) => {
                    out.push(fail(n, format!("homotopy component is not well-defined: {e}")))
                }
            }
        }
        out
    }

    /// Concatenation α + β: f ≃ h for α: f ≃ g, β: g ≃ h.
    pub fn concat(&self, other: &Homotopy) -> Homotopy {
        assert!(
            self.to.eq_as_maps(&other.from),
            "concat endpoints do not match"
        );
        let comps = self
            .components
            .keys()
            .chain(other.components.keys())
            .copied()
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .map(|n| (n, self.component(n).add(&other.component(n))))
            .collect();
        Homotopy::new_unvalidated(self.from.clone(), other.to.clone(), comps)
    }

    /// Reverse −α: g ≃ f.
    pub fn reverse(&self) -> Homotopy {
        let comps = self.components.iter().map(|(n, m)| (*n, m.neg())).collect();
        Homotopy::new_unvalidated(self.to.clone(), self.from.clone(), comps)
    }

    /// Whisker composition v.α.u with maps on both sides; components
    /// v_{n+1} ∘ α_n ∘ u_n.
    pub fn whisker(v: &ChainMap, alpha: &Homotopy, u: &ChainMap) -> Homotopy {
        assert_eq!(u.target(), alpha.source(), "whisker shape mismatch (right)");
        assert_eq!(alpha.target(), v.source(), "whisker shape mismatch (left)");
        let from = v.compose(&alpha.from).compose(u);
        let to = v.compose(&alpha.to).compose(u);
        let degrees: std::collections::BTreeSet<i64> =
            alpha.components.keys().copied().collect();
        let comps = degrees
            .into_iter()
            .map(|n| (n, v.component(n + 1).mul(&alpha.component(n)).mul(&u.component(n))))
            .collect();
        Homotopy::new_unvalidated(from, to, comps)
    }

    /// Postcompose with a map: v.α.
    pub fn whisker_left(v: &ChainMap, alpha: &Homotopy) -> Homotopy {
        Homotopy::whisker(v, alpha, &ChainMap::identity(alpha.source()))
    }

    /// Precompose with a map: α.u.
    pub fn whisker_right(alpha: &Homotopy, u: &ChainMap) -> Homotopy {
        Homotopy::whisker(&ChainMap::identity(alpha.target()), alpha, u)
    }

    pub fn eq_as_homotopies(&self, other: &Homotopy) -> bool {
        if self.source() != other.source() || self.target() != other.target() {
            return false;
        }
        let degrees: std::collections::BTreeSet<i64> = self
            .components
            .keys()
            .chain(other.components.keys())
            .copied()
            .collect();
        degrees.into_iter().all(|n| {
            let a = ModuleMap::new(self.source().component(n), self.target().component(n + 1), self.component(n));
            let b = ModuleMap::new(other.source().component(n), other.target().component(n + 1), other.component(n));
            match (a, b) {
                (Ok(a), Ok(b)) => a.eq_as_maps(&b),
                _ => false,
            }
        })
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct TwoHomotopy {
    from: Homotopy,
    to: Homotopy,
    components: BTreeMap<i64, Matrix>,
}

impl TwoHomotopy {
    pub fn new(
        from: Homotopy,
        to: Homotopy,
        components: BTreeMap<i64, Matrix>,
    ) -> Result<TwoHomotopy, Vec<Diagnostic>> {
        let h = TwoHomotopy {
            from,
            to,
            components,
        };
        let diags = h.diagnostics();
        if diags.is_empty() {
            Ok(h)
        } else {
            Err(diags)
        }
    }

    pub fn from_homotopy(&self) -> &Homotopy {
        &self.from
    }

    pub fn to_homotopy(&self) -> &Homotopy {
        &self.to
    }

    pub fn component(&self, n: i64) -> Matrix {
        self.components.get(&n).cloned().unwrap_or_else(|| {
            Matrix::zero(
                self.from.ring(),
                self.from.target().rank(n + 2),
                self.from.source().rank(n),
            )
        })
    }

    pub fn diagnostics(&self) -> Vec<Diagnostic> {
        let mut out = Vec::new();
        if self.from.source() != self.to.source() || self.from.target() != self.to.target() {
            out.push(fail(0, "2-homotopy endpoints are not parallel"));
            return out;
        }
        if !self.from.from_map().eq_as_maps(self.to.from_map())
            || !self.from.to_map().eq_as_maps(self.to.to_map())
        {
            out.push(fail(0, "2-homotopy endpoints bound different homotopies"));
            return out;
        }
        let src = self.from.source();
        let tgt = self.from.target();
        let Some((lo, hi)) = src.support() else {
            return out;
        };
        for n in lo - 1..=hi + 1 {
            if src.rank(n) == 0 || tgt.rank(n + 1) == 0 {
                continue;
            }
            let lam_n = ModuleMap::new(src.component(n), tgt.component(n + 2), self.component(n));
            let lam_prev = ModuleMap::new(src.component(n - 1), tgt.component(n + 1), self.component(n - 1));
            match (lam_n, lam_prev) {
                (Ok(ln), Ok(lprev)) => {
                    // α′ − α = ∂Λ − Λ∂
                    let alpha_n = ModuleMap::new(src.component(n), tgt.component(n + 1), self.from.component(n))
                        .expect("validated homotopy component");
                    let alpha2_n = ModuleMap::new(src.component(n), tgt.component(n + 1), self.to.component(n))
                        .expect("validated homotopy component");
                    let lhs = alpha2_n.add(&alpha_n.neg());
                    let rhs = tgt
                        .differential(n + 2)
                        .compose(&ln)
                        .add(&lprev.compose(&src.differential(n)).neg());
                    if !lhs.eq_as_maps(&rhs) {
                        out.push(fail(n, "2-homotopy identity fails"));
                    }
                }
                (Err(e), _) | (_, Err(e)) => {
                    out.push(fail(n, format!("2-homotopy component is not well-defined: {e}")))
                }
            }
        }
        out
    }
}

/// Homology at degree n, with the canonical invariant-factor decomposition.
#[derive(Clone, Debug)]
pub struct Homology {
    pub module: PresentedModule,
    pub invariants: InvariantFactors,
}

pub fn homology(c: &ChainComplex, n: i64) -> Homology {
    let d_n = c.differential(n);
    let (_, incl) = module_kernel(&d_n);
    let d_next = c.differential(n + 1);
    let boundaries_in_cycles = lift_through(&incl, &d_next)
        .expect("boundaries are cycles since the complex validates");
    let (module, _) = module_cokernel(&boundaries_in_cycles);
    let invariants = module.invariant_factors();
    Homology { module, invariants }
}

/// The map H_n(src) → H_n(tgt) induced by a degreewise matrix t_n that sends
/// cycles to cycles and boundaries to boundaries.
pub fn induced_between_homologies(
    src: &ChainComplex,
    src_n: i64,
    tgt: &ChainComplex,
    tgt_n: i64,
    t: &Matrix,
) -> ModuleMap {
    let (_, incl_s) = module_kernel(&src.differential(src_n));
    let (_, incl_t) = module_kernel(&tgt.differential(tgt_n));
    let hs = homology(src, src_n).module;
    let ht = homology(tgt, tgt_n).module;
    let carried = ModuleMap::new(incl_s.source().clone(), tgt.component(tgt_n), t.mul(incl_s.matrix()))
        .expect("image of cycles is well-defined");
    let lifted = lift_through(&incl_t, &carried).expect("cycles map to cycles");
    ModuleMap::new(hs, ht, lifted.matrix().clone()).expect("induced map descends to homology")
}

pub fn induced_on_homology(f: &ChainMap, n: i64) -> ModuleMap {
    induced_between_homologies(f.source(), n, f.target(), n, &f.component(n))
}
