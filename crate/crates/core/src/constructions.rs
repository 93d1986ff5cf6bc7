//! Standard homotopy-theoretic constructions on chain complexes.
//!
//! The h-kernel of f: A → B is (Kf)_n = A_n ⊕ B_{n+1} with
//! ∂(a, b) = (∂a, fa − ∂b), projection k(a, b) = a and structural
//! nullhomotopy κ(a, b) = b. The h-cokernel is (Cf)_n = A_{n−1} ⊕ B_n with
//! ∂(a, b) = (−∂a, −fa + ∂b), c(b) = (0, b), γ(a) = (−a, 0). Degree shifts
//! negate differentials once per step, and shifting a homotopy also flips
//! its sign once per step.

use crate::complex::{ChainComplex, ChainMap, Diagnostic, Homotopy};
use crate::matrix::Matrix;
use crate::module::PresentedModule;
use std::collections::BTreeMap;

/// h-kernel triple (Kf, kf, κf) together with the map it was built from.
#[derive(Clone, Debug)]
pub struct HKernelData {
    pub f: ChainMap,
    pub object: ChainComplex,
    /// kf: Kf → A
    pub map: ChainMap,
    /// κf: 0 ≃ f ∘ kf
    pub nullhomotopy: Homotopy,
}

/// h-cokernel triple (Cf, cf, γf) together with the map it was built from.
#[derive(Clone, Debug)]
pub struct HCokernelData {
    pub f: ChainMap,
    pub object: ChainComplex,
    /// cf: B → Cf
    pub map: ChainMap,
    /// γf: 0 ≃ cf ∘ f
    pub nullhomotopy: Homotopy,
}

fn degree_window(a: &ChainComplex, b: &ChainComplex, b_offset: i64) -> Vec<i64> {
    let mut lo = i64::MAX;
    let mut hi = i64::MIN;
    if let Some((l, h)) = a.support() {
        lo = lo.min(l);
        hi = hi.max(h);
    }
    if let Some((l, h)) = b.support() {
        lo = lo.min(l + b_offset);
        hi = hi.max(h + b_offset);
    }
    if lo > hi {
        Vec::new()
    } else {
        (lo..=hi).collect()
    }
}

pub fn hker(f: &ChainMap) -> HKernelData {
    let ring = f.ring();
    let a = f.source().clone();
    let b = f.target().clone();
    let window = degree_window(&a, &b, -1);
    let mut components = BTreeMap::new();
    let mut differentials = BTreeMap::new();
    let mut k_comps = BTreeMap::new();
    let mut kappa_comps = BTreeMap::new();
    for &n in &window {
        components.insert(
            n,
            PresentedModule::direct_sum(ring, &[&a.component(n), &b.component(n + 1)]),
        );
    }
    for &n in &window {
        let da = a.differential_matrix(n);
        let db = b.differential_matrix(n + 1);
        let fn_ = f.component(n);
        let z = Matrix::zero(ring, a.rank(n - 1), b.rank(n + 1));
        differentials.insert(n, Matrix::from_blocks(ring, &[vec![&da, &z], vec![&fn_, &db.neg()]]));
        k_comps.insert(
            n,
            Matrix::hstack(&[
                &Matrix::identity(ring, a.rank(n)),
                &Matrix::zero(ring, a.rank(n), b.rank(n + 1)),
            ]),
        );
        kappa_comps.insert(
            n,
            Matrix::hstack(&[
                &Matrix::zero(ring, b.rank(n + 1), a.rank(n)),
                &Matrix::identity(ring, b.rank(n + 1)),
            ]),
        );
    }
    let object = ChainComplex::new(ring, components, differentials).expect("h-kernel differential squares to zero");
    let map = ChainMap::new(object.clone(), a, k_comps).expect("kf is a chain map");
    let fk = f.compose(&map);
    let nullhomotopy = Homotopy::nullhomotopy(&fk, kappa_comps).expect("κf is a nullhomotopy of f∘kf");
    HKernelData { f: f.clone(), object, map, nullhomotopy }
}

pub fn hcok(f: &ChainMap) -> HCokernelData {
    let ring = f.ring();
    let a = f.source().clone();
    let b = f.target().clone();
    let window = degree_window(&b, &a, 1);
    let mut components = BTreeMap::new();
    let mut differentials = BTreeMap::new();
    let mut c_comps = BTreeMap::new();
    let mut gamma_comps = BTreeMap::new();
    for &n in &window {
        components.insert(
            n,
            PresentedModule::direct_sum(ring, &[&a.component(n - 1), &b.component(n)]),
        );
    }
    for &n in &window {
        let da = a.differential_matrix(n - 1);
        let db = b.differential_matrix(n);
        let fprev = f.component(n - 1);
        let z = Matrix::zero(ring, a.rank(n - 2), b.rank(n));
        differentials.insert(
            n,
            Matrix::from_blocks(ring, &[vec![&da.neg(), &z], vec![&fprev.neg(), &db]]),
        );
        c_comps.insert(
            n,
            Matrix::vstack(&[
                &Matrix::zero(ring, a.rank(n - 1), b.rank(n)),
                &Matrix::identity(ring, b.rank(n)),
            ]),
        );
        // γ_{n−1} : A_{n−1} → (Cf)_n = A_{n−1} ⊕ B_n
        gamma_comps.insert(
            n - 1,
            Matrix::vstack(&[
                &Matrix::identity(ring, a.rank(n - 1)).neg(),
                &Matrix::zero(ring, b.rank(n), a.rank(n - 1)),
            ]),
        );
    }
    let object = ChainComplex::new(ring, components, differentials).expect("h-cokernel differential squares to zero");
    let map = ChainMap::new(b, object.clone(), c_comps).expect("cf is a chain map");
    let cf_f = map.compose(f);
    let nullhomotopy = Homotopy::nullhomotopy(&cf_f, gamma_comps).expect("γf is a nullhomotopy of cf∘f");
    HCokernelData { f: f.clone(), object, map, nullhomotopy }
}

/// Σ^k for k > 0, Ω^{−k} for k < 0, strict on the nose.
pub fn shift_complex(a: &ChainComplex, k: i64) -> ChainComplex {
    let ring = a.ring();
    let sign_flip = k.rem_euclid(2) == 1;
    let components: BTreeMap<i64, PresentedModule> =
        a.degrees().map(|n| (n + k, a.component(n))).collect();
    let differentials: BTreeMap<i64, Matrix> = a
        .degrees()
        .filter(|&n| a.rank(n) > 0 && a.rank(n - 1) > 0)
        .map(|n| {
            let d = a.differential_matrix(n);
            (n + k, if sign_flip { d.neg() } else { d })
        })
        .collect();
    ChainComplex::new(ring, components, differentials).expect("shift preserves ∂∂ = 0")
}

pub fn shift_map(f: &ChainMap, k: i64) -> ChainMap {
    let comps: BTreeMap<i64, Matrix> =
        f.components().iter().map(|(n, m)| (*n + k, m.clone())).collect();
    ChainMap::new(shift_complex(f.source(), k), shift_complex(f.target(), k), comps)
        .expect("shifted chain map commutes")
}

/// Shifting a homotopy flips its sign once per step.
pub fn shift_homotopy(h: &Homotopy, k: i64) -> Homotopy {
    let sign_flip = k.rem_euclid(2) == 1;
    let comps: BTreeMap<i64, Matrix> = h
        .components()
        .iter()
        .map(|(n, m)| (*n + k, if sign_flip { m.neg() } else { m.clone() }))
        .collect();
    Homotopy::new(shift_map(h.from_map(), k), shift_map(h.to_map(), k), comps)
        .expect("shifted homotopy satisfies the homotopy identity")
}

/// ω_A: 0 ≃ 0: ΩA → A, the structural homotopy of the loop object;
/// components are identities.
pub fn omega_homotopy(a: &ChainComplex) -> Homotopy {
    let ring = a.ring();
    let omega = shift_complex(a, -1);
    let zero = ChainMap::zero(&omega, a);
    let comps: BTreeMap<i64, Matrix> = omega
        .degrees()
        .map(|n| (n, Matrix::identity(ring, omega.rank(n))))
        .collect();
    Homotopy::new(zero.clone(), zero, comps).expect("ω_A is a homotopy 0 ≃ 0")
}

/// σ_A: 0 ≃ 0: A → ΣA; components are identities.
pub fn sigma_homotopy(a: &ChainComplex) -> Homotopy {
    let ring = a.ring();
    let sigma = shift_complex(a, 1);
    let zero = ChainMap::zero(a, &sigma);
    let comps: BTreeMap<i64, Matrix> = a
        .degrees()
        .map(|n| (n, Matrix::identity(ring, a.rank(n))))
        .collect();
    Homotopy::new(zero.clone(), zero, comps).expect("σ_A is a homotopy 0 ≃ 0")
}

/// Unique factorization through the h-kernel: given x: X → A and a validating
/// ξ: 0 ≃ f∘x, the map u = (x, ξ): X → Kf with kf∘u = x and κf·u = ξ.
pub fn factor_through_hker(
    hk: &HKernelData,
    x: &ChainMap,
    xi: &Homotopy,
) -> Result<ChainMap, Vec<Diagnostic>> {
    let mut diags = xi.diagnostics();
    if !xi.from_map().is_zero_map() || !xi.to_map().eq_as_maps(&hk.f.compose(x)) {
        diags.push(Diagnostic { degree: 0, message: "ξ is not a nullhomotopy of f∘x".into() });
    }
    if !diags.is_empty() {
        return Err(diags);
    }
    let comps: BTreeMap<i64, Matrix> = hk
        .object
        .degrees()
        .map(|n| (n, Matrix::vstack(&[&x.component(n), &xi.component(n)])))
        .collect();
    Ok(ChainMap::new(x.source().clone(), hk.object.clone(), comps)
        .expect("factorization through the h-kernel is a chain map"))
}

/// Dual factorization: given y: B → Y and η: 0 ≃ y∘f, the map v: Cf → Y with
/// v∘cf = y and v·γf = η; blockwise v(a, b) = −η(a) + y(b).
pub fn factor_through_hcok(
    hc: &HCokernelData,
    y: &ChainMap,
    eta: &Homotopy,
) -> Result<ChainMap, Vec<Diagnostic>> {
    let mut diags = eta.diagnostics();
    if !eta.from_map().is_zero_map() || !eta.to_map().eq_as_maps(&y.compose(&hc.f)) {
        diags.push(Diagnostic { degree: 0, message: "η is not a nullhomotopy of y∘f".into() });
    }
    if !diags.is_empty() {
        return Err(diags);
    }
    let comps: BTreeMap<i64, Matrix> = hc
        .object
        .degrees()
        .map(|n| {
            (
                n,
                Matrix::hstack(&[&eta.component(n - 1).neg(), &y.component(n)]),
            )
        })
        .collect();
    Ok(ChainMap::new(hc.object.clone(), y.target().clone(), comps)
        .expect("factorization through the h-cokernel is a chain map"))
}

/// The canonical stability data of a map: ρ = cκ − γk: 0 ≃ 0: Kf → Cf (its
/// components are identity matrices) and the adjoint comparison maps
/// V_f: ΣKf → Cf, U_f: Kf → ΩCf (identities on components).
pub struct StabilityData {
    pub rho: Homotopy,
    pub v_comparison: ChainMap,
    pub u_comparison: ChainMap,
}

pub fn canonical_stability(f: &ChainMap) -> StabilityData {
    let ring = f.ring();
    let kf = hker(f);
    let cf = hcok(f);
    let zero = ChainMap::zero(&kf.object, &cf.object);
    let rho_comps: BTreeMap<i64, Matrix> = kf
        .object
        .degrees()
        .map(|n| (n, Matrix::identity(ring, kf.object.rank(n))))
        .collect();
    let rho = Homotopy::new(zero.clone(), zero, rho_comps).expect("ρ is a homotopy 0 ≃ 0");
    let sigma_k = shift_complex(&kf.object, 1);
    let v_comps: BTreeMap<i64, Matrix> = sigma_k
        .degrees()
        .map(|n| (n, Matrix::identity(ring, sigma_k.rank(n))))
        .collect();
    let v_comparison = ChainMap::new(sigma_k, cf.object.clone(), v_comps)
        .expect("ΣKf → Cf identity comparison is a chain map");
    let omega_c = shift_complex(&cf.object, -1);
    let u_comps: BTreeMap<i64, Matrix> = kf
        .object
        .degrees()
        .map(|n| (n, Matrix::identity(ring, kf.object.rank(n))))
        .collect();
    let u_comparison = ChainMap::new(kf.object, omega_c, u_comps)
        .expect("Kf → ΩCf identity comparison is a chain map");
    StabilityData { rho, v_comparison, u_comparison }
}

/// A homotopy-commutative square f = (left, right; φ): x → y between maps
/// x: X′ → X″ and y: Y′ → Y″, with φ: right∘x ≃ y∘left.
#[derive(Clone, Debug)]
pub struct CoherentSquare {
    pub x: ChainMap,
    pub y: ChainMap,
    pub left: ChainMap,
    pub right: ChainMap,
    pub phi: Homotopy,
}

impl CoherentSquare {
    pub fn new(
        x: ChainMap,
        y: ChainMap,
        left: ChainMap,
        right: ChainMap,
        phi: Homotopy,
    ) -> Result<CoherentSquare, Vec<Diagnostic>> {
        let mut diags = phi.diagnostics();
        if !phi.from_map().eq_as_maps(&right.compose(&x)) || !phi.to_map().eq_as_maps(&y.compose(&left)) {
            diags.push(Diagnostic { degree: 0, message: "φ does not connect right∘x to y∘left".into() });
        }
        if diags.is_empty() {
            Ok(CoherentSquare { x, y, left, right, phi })
        } else {
            Err(diags)
        }
    }

    /// Strictly commuting square, φ = 0.
    pub fn strict(x: ChainMap, y: ChainMap, left: ChainMap, right: ChainMap) -> Result<CoherentSquare, Vec<Diagnostic>> {
        let rx = right.compose(&x);
        let yl = y.compose(&left);
        if !rx.eq_as_maps(&yl) {
            return Err(vec![Diagnostic { degree: 0, message: "square does not commute strictly".into() }]);
        }
        let phi = Homotopy::trivial(&rx);
        // endpoints must agree literally for the trivial homotopy; they do,
        // since both sides were just checked equal as maps and the trivial
        // homotopy only needs its stored endpoints
        Ok(CoherentSquare { x, y, left, right, phi })
    }
}

/// The coherent h-kernel functor on a square: K(f): Kx → Ky with
/// ky∘K(f) = left∘kx and κy·K(f) = right·κx + φ·kx. For φ = 0 this is the
/// strict functor (left, right-shift) blockwise.
pub fn coherent_k(sq: &CoherentSquare) -> (ChainMap, HKernelData, HKernelData) {
    let kx = hker(&sq.x);
    let ky = hker(&sq.y);
    let x_part = sq.left.compose(&kx.map);
    let xi = Homotopy::whisker_left(&sq.right, &kx.nullhomotopy)
        .concat(&Homotopy::whisker_right(&sq.phi, &kx.map));
    let map = factor_through_hker(&ky, &x_part, &xi).expect("coherent square induces a kernel map");
    (map, kx, ky)
}

/// Dual coherent h-cokernel functor: C(f): Cx → Cy with C(f)∘cx = cy∘right
/// and C(f)·γx = γy·left − cy·φ.
pub fn coherent_c(sq: &CoherentSquare) -> (ChainMap, HCokernelData, HCokernelData) {
    let cx = hcok(&sq.x);
    let cy = hcok(&sq.y);
    let y_part = cy.map.compose(&sq.right);
    let eta = Homotopy::whisker_right(&cy.nullhomotopy, &sq.left)
        .concat(&Homotopy::whisker_left(&cy.map, &sq.phi).reverse());
    let map = factor_through_hcok(&cx, &y_part, &eta).expect("coherent square induces a cokernel map");
    (map, cx, cy)
}

/// The fibre–cofibre sequence of f, with `left` maps to the left of f and
/// `right` maps to the right.
///
/// Positions are indexed so that f sits at 0: … → ΩB → Kf → A → B → Cf → ΣA → …
/// The connecting maps are δ: Cf → ΣA, (a, b) ↦ −a with σf: 0 ≃ Σf∘δ,
/// (a, b) ↦ b (so that σf∘cf = σ_B on the nose), and on the fibre side
/// d = Ω(cf): ΩB → Kf, b ↦ (0, b) with ωf = Ω(γf) (so that kf·ωf = ω_A).
pub struct FibreCofibreSequence {
    first: i64,
    objects: Vec<ChainComplex>,
    maps: Vec<ChainMap>,
    nullhomotopies: Vec<Homotopy>,
}

impl FibreCofibreSequence {
    /// Positions p with a map m_p: O_p → O_{p+1}.
    pub fn map_positions(&self) -> impl Iterator<Item = i64> + '_ {
        self.first..self.first + self.maps.len() as i64
    }

    pub fn object(&self, p: i64) -> &ChainComplex {
        &self.objects[(p - self.first) as usize]
    }

    pub fn map(&self, p: i64) -> &ChainMap {
        &self.maps[(p - self.first) as usize]
    }

    /// Nullhomotopy of m_{p+1} ∘ m_p.
    pub fn nullhomotopy(&self, p: i64) -> &Homotopy {
        &self.nullhomotopies[(p - self.first) as usize]
    }

    /// Positions p carrying a three-term window (m_p, m_{p+1}; ν_p).
    pub fn window_positions(&self) -> impl Iterator<Item = i64> + '_ {
        self.first..self.first + self.nullhomotopies.len() as i64
    }

    pub fn window(&self, p: i64) -> (ChainMap, ChainMap, Homotopy) {
        (self.map(p).clone(), self.map(p + 1).clone(), self.nullhomotopy(p).clone())
    }
}

pub fn fibre_cofibre_sequence(f: &ChainMap, left: usize, right: usize) -> FibreCofibreSequence {
    let ring = f.ring();
    let a = f.source().clone();
    let b = f.target().clone();
    let kd = hker(f);
    let cd = hcok(f);

    // δ: Cf → ΣA, (a, b) ↦ −a
    let sigma_a = shift_complex(&a, 1);
    let delta_comps: BTreeMap<i64, Matrix> = cd
        .object
        .degrees()
        .map(|n| {
            (
                n,
                Matrix::hstack(&[
                    &Matrix::identity(ring, a.rank(n - 1)).neg(),
                    &Matrix::zero(ring, a.rank(n - 1), b.rank(n)),
                ]),
            )
        })
        .collect();
    let delta = ChainMap::new(cd.object.clone(), sigma_a.clone(), delta_comps)
        .expect("connecting map δ is a chain map");

    // σf: 0 ≃ Σf ∘ δ, (a, b) ↦ b
    let sf = shift_map(f, 1);
    let sigma_f_target = sf.compose(&delta);
    let sigma_f_comps: BTreeMap<i64, Matrix> = cd
        .object
        .degrees()
        .map(|n| {
            (
                n,
                Matrix::hstack(&[
                    &Matrix::zero(ring, b.rank(n), a.rank(n - 1)),
                    &Matrix::identity(ring, b.rank(n)),
                ]),
            )
        })
        .collect();
    let sigma_f = Homotopy::nullhomotopy(&sigma_f_target, sigma_f_comps)
        .expect("σf is a nullhomotopy of Σf∘δ");

    // base block, positions -1..=2: kf, f, cf, δ
    let base_maps = [kd.map.clone(), f.clone(), cd.map.clone(), delta];
    let zero_after_cf = Homotopy::trivial(&ChainMap::zero(&b, &sigma_a));
    let base_nulls = [kd.nullhomotopy.clone(), cd.nullhomotopy.clone(), zero_after_cf, sigma_f];

    let first = -(left as i64);
    let last = right as i64; // maps m_first ..= m_last
    // base maps and window nullhomotopies at anchor positions:
    //   m_{-1} = kf (ν_{-1} = κf), m_0 = f (ν_0 = γf), m_1 = cf (ν_1 = 0),
    //   m_2 = δ (ν_2 = σf); the rest are strict shifts, except that the
    //   connecting column left of the centre shifts from kf, not from δ
    //   (the two differ by the canonical rotation sign).
    let mut maps: Vec<ChainMap> = Vec::new();
    for p in first..=last {
        let m = match p.rem_euclid(3) {
            0 => shift_map(f, p / 3),
            1 => shift_map(&base_maps[2], (p - 1) / 3),
            _ => {
                if p >= 2 {
                    shift_map(&base_maps[3], (p - 2) / 3)
                } else {
                    shift_map(&base_maps[0], (p + 1) / 3)
                }
            }
        };
        maps.push(m);
    }
    let mut nullhomotopies: Vec<Homotopy> = Vec::new();
    for p in first..last {
        let nu = match p.rem_euclid(3) {
            0 => shift_homotopy(&base_nulls[1], p / 3),
            1 => shift_homotopy(&base_nulls[2], (p - 1) / 3),
            _ => {
                if p >= 2 {
                    shift_homotopy(&base_nulls[3], (p - 2) / 3)
                } else {
                    shift_homotopy(&base_nulls[0], (p + 1) / 3)
                }
            }
        };
        nullhomotopies.push(nu);
    }
    let mut objects: Vec<ChainComplex> = maps.iter().map(|m| m.source().clone()).collect();
    objects.push(maps.last().expect("sequence has at least one map").target().clone());

    FibreCofibreSequence { first, objects, maps, nullhomotopies }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    fn z() -> Ring {
        Ring::Int
    }

    fn point(ring: Ring, deg: i64) -> ChainComplex {
        ChainComplex::concentrated(ring, deg, PresentedModule::free(ring, 1))
    }

    fn scaling_map(ring: Ring, c: &ChainComplex, s: i64) -> ChainMap {
        let comps = c.degrees().map(|n| (n, Matrix::identity(ring, c.rank(n)).scale(&ring.from_i64(s)))).collect();
        ChainMap::new(c.clone(), c.clone(), comps).unwrap()
    }

    #[test]
    fn hker_of_multiplication_is_two_term_complex() {
        let a = point(z(), 0);
        let f = scaling_map(z(), &a, 3);
        let k = hker(&f);
        assert_eq!(k.object.support(), Some((-1, 0)));
        assert_eq!(k.object.differential_matrix(0), Matrix::scalar(z(), 3));
    }

    #[test]
    fn hker_of_map_to_zero_is_identity() {
        let a = ChainComplex::from_ranks(z(), 0, &[1, 2], &[Matrix::zero(z(), 1, 2)]).unwrap();
        let f = ChainMap::zero(&a, &ChainComplex::empty(z()));
        let k = hker(&f);
        assert_eq!(k.object, a);
        assert!(k.map.eq_as_maps(&ChainMap::identity(&a)));
        assert!(k.nullhomotopy.components().is_empty());
    }

    #[test]
    fn hker_of_map_from_zero_is_loop() {
        let b = ChainComplex::from_ranks(z(), 0, &[1, 1], &[Matrix::scalar(z(), 2)]).unwrap();
        let f = ChainMap::zero(&ChainComplex::empty(z()), &b);
        let k = hker(&f);
        assert_eq!(k.object, shift_complex(&b, -1));
        assert_eq!(k.object.differential_matrix(0), Matrix::scalar(z(), -2));
        // κ agrees with ω_B
        assert!(k.nullhomotopy.eq_as_homotopies(&omega_homotopy(&b)));
    }

    #[test]
    fn hcok_of_multiplication() {
        let a = point(z(), 0);
        let f = scaling_map(z(), &a, 4);
        let c = hcok(&f);
        assert_eq!(c.object.support(), Some((0, 1)));
        assert_eq!(c.object.differential_matrix(1), Matrix::scalar(z(), -4));
    }

    #[test]
    fn hcok_of_map_from_zero_is_identity() {
        let a = ChainComplex::from_ranks(z(), 0, &[2, 1], &[Matrix::zero(z(), 2, 1)]).unwrap();
        let f = ChainMap::zero(&ChainComplex::empty(z()), &a);
        let c = hcok(&f);
        assert_eq!(c.object, a);
        assert!(c.map.eq_as_maps(&ChainMap::identity(&a)));
    }

    #[test]
    fn hcok_of_map_to_zero_is_suspension() {
        let a = ChainComplex::from_ranks(z(), 0, &[1, 1], &[Matrix::scalar(z(), 5)]).unwrap();
        let f = ChainMap::zero(&a, &ChainComplex::empty(z()));
        let c = hcok(&f);
        assert_eq!(c.object, shift_complex(&a, 1));
        assert_eq!(c.object.differential_matrix(2), Matrix::scalar(z(), -5));
        assert!(c.nullhomotopy.eq_as_homotopies(&sigma_homotopy(&a).reverse()));
    }

    #[test]
    fn shift_is_a_strict_involution_pair() {
        let a = ChainComplex::from_ranks(z(), -1, &[2, 3, 1], &[
            Matrix::from_rows_i64(z(), &[vec![1, 0, 2], vec![0, 0, 4]]),
            Matrix::from_rows_i64(z(), &[vec![0], vec![0], vec![0]]),
        ])
        .unwrap();
        assert_eq!(shift_complex(&a, 0), a);
        assert_eq!(shift_complex(&shift_complex(&a, 1), -1), a);
        assert_eq!(shift_complex(&shift_complex(&a, -1), 1), a);
        // ∂^{ΣA}_{n} = −∂_{n−1}
        let s = shift_complex(&a, 1);
        assert_eq!(s.differential_matrix(1), a.differential_matrix(0).neg());
    }

    #[test]
    fn factorization_recovers_kernel_data() {
        let a = ChainComplex::from_ranks(z(), 0, &[1, 1], &[Matrix::scalar(z(), 2)]).unwrap();
        let f = scaling_map(z(), &a, 3);
        let k = hker(&f);
        let u = factor_through_hker(&k, &k.map, &k.nullhomotopy).unwrap();
        assert!(u.eq_as_maps(&ChainMap::identity(&k.object)));
        // empty X gives the zero factorization
        let x = ChainMap::zero(&ChainComplex::empty(z()), f.source());
        let xi = Homotopy::trivial(&f.compose(&x));
        let u0 = factor_through_hker(&k, &x, &xi).unwrap();
        assert!(u0.is_zero_map());
    }

    #[test]
    fn factorization_recovers_cokernel_data() {
        let a = ChainComplex::from_ranks(z(), 0, &[1, 1], &[Matrix::scalar(z(), 2)]).unwrap();
        let f = scaling_map(z(), &a, 3);
        let c = hcok(&f);
        let v = factor_through_hcok(&c, &c.map, &c.nullhomotopy).unwrap();
        assert!(v.eq_as_maps(&ChainMap::identity(&c.object)));
    }

    #[test]
    fn stability_data_is_identities() {
        let a = ChainComplex::from_ranks(z(), 0, &[2, 2], &[Matrix::from_rows_i64(z(), &[vec![1, 2], vec![3, 4]])]).unwrap();
        let f = scaling_map(z(), &a, 2);
        let st = canonical_stability(&f);
        assert!(st.rho.components().values().all(|m| m.is_identity()));
        assert!(st.v_comparison.components().values().all(|m| m.is_identity()));
        assert!(st.u_comparison.components().values().all(|m| m.is_identity()));
        // the same shape holds for the zero map
        let st0 = canonical_stability(&ChainMap::zero(&a, &a));
        assert!(st0.rho.components().values().all(|m| m.is_identity()));
    }

    #[test]
    fn strict_square_induces_block_kernel_map() {
        let a = point(z(), 0);
        let x = scaling_map(z(), &a, 2);
        let y = scaling_map(z(), &a, 2);
        let sq = CoherentSquare::strict(x.clone(), y, scaling_map(z(), &a, 3), scaling_map(z(), &a, 3)).unwrap();
        let (kmap, kx, ky) = coherent_k(&sq);
        // ky ∘ K(f) = left ∘ kx
        assert!(ky.map.compose(&kmap).eq_as_maps(&sq.left.compose(&kx.map)));
        // identity square gives the identity
        let idsq = CoherentSquare::strict(x.clone(), x.clone(), ChainMap::identity(&a), ChainMap::identity(&a)).unwrap();
        let (idk, kxx, _) = coherent_k(&idsq);
        assert!(idk.eq_as_maps(&ChainMap::identity(&kxx.object)));
    }

    #[test]
    fn coherent_c_satisfies_its_equations() {
        let a = point(z(), 0);
        let x = scaling_map(z(), &a, 2);
        let y = scaling_map(z(), &a, 2);
        let sq = CoherentSquare::strict(x, y, scaling_map(z(), &a, 3), scaling_map(z(), &a, 3)).unwrap();
        let (cmap, cx, cy) = coherent_c(&sq);
        assert!(cmap.compose(&cx.map).eq_as_maps(&cy.map.compose(&sq.right)));
        let lhs = Homotopy::whisker_left(&cmap, &cx.nullhomotopy);
        let rhs = Homotopy::whisker_right(&cy.nullhomotopy, &sq.left);
        assert!(lhs.eq_as_homotopies(&rhs));
    }

    #[test]
    fn fibre_cofibre_identities_hold_on_the_nose() {
        let a = ChainComplex::from_ranks(z(), 0, &[1, 1], &[Matrix::scalar(z(), 2)]).unwrap();
        let f = scaling_map(z(), &a, 3);
        let seq = fibre_cofibre_sequence(&f, 4, 5);
        // σf ∘ cf = σ_B exactly
        let sigma_f = seq.nullhomotopy(2);
        let cf = seq.map(1);
        let restricted = Homotopy::whisker_right(sigma_f, cf);
        assert_eq!(restricted, sigma_homotopy(f.target()));
        // dually kf · ωf = ω_A exactly
        let omega_f = seq.nullhomotopy(-3);
        let kf = seq.map(-1);
        let co = Homotopy::whisker_left(kf, omega_f);
        assert_eq!(co, omega_homotopy(f.source()));
        // cones of identities are contractible is checked elsewhere; here:
        // composites vanish up to the stored nullhomotopies
        for p in seq.window_positions() {
            let (mp, mq, nu) = seq.window(p);
            assert!(nu.to_map().eq_as_maps(&mq.compose(&mp)), "window at {p}");
            assert!(nu.diagnostics().is_empty());
        }
    }

    #[test]
    fn fibre_cofibre_shift_periodicity() {
        let a = ChainComplex::from_ranks(z(), 0, &[2, 1], &[Matrix::from_rows_i64(z(), &[vec![2], vec![0]])]).unwrap();
        let b = point(z(), 0);
        let f = ChainMap::new(a.clone(), b.clone(), [(0, Matrix::from_rows_i64(z(), &[vec![0, 1]]))].into()).unwrap();
        let seq = fibre_cofibre_sequence(&f, 5, 6);
        for p in seq.map_positions() {
            if p + 3 > *seq.map_positions().collect::<Vec<_>>().last().unwrap() {
                continue;
            }
            assert_eq!(shift_complex(seq.object(p), 1), *seq.object(p + 3), "object at {p}");
            if p == -1 {
                // the central connecting seam carries the canonical sign
                assert!(shift_map(seq.map(p), 1).eq_as_maps(&seq.map(p + 3).neg()));
            } else {
                assert!(shift_map(seq.map(p), 1).eq_as_maps(seq.map(p + 3)), "map at {p}");
            }
        }
    }
}
