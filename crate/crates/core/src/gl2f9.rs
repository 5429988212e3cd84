//! The subgroups of `GL2(F9)` lifting the canonical `PGL2(F3) ≅ S4`, checked
//! by brute force over explicit element sets.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::check::{CheckResult, SuiteReport};

/// `a + b·x` in `F3[x]/(x² + 1)`, stored as `a + 3b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct F9(u8);

impl F9 {
    pub const ZERO: F9 = F9(0);
    pub const ONE: F9 = F9(1);

    pub fn new(a: u8, b: u8) -> F9 {
        F9(a % 3 + 3 * (b % 3))
    }

    pub fn parts(self) -> (u8, u8) {
        (self.0 % 3, self.0 / 3)
    }

    pub fn all() -> impl Iterator<Item = F9> {
        (0..9).map(F9)
    }

    pub fn pow(self, e: u32) -> F9 {
        (0..e).fold(F9::ONE, |acc, _| acc.mul(self))
    }

    pub fn inv(self) -> F9 {
        assert!(self != F9::ZERO, "inverse of zero in F9");
        self.pow(7)
    }

    /// Primitive eighth root of unity `1 + x`.
    pub fn zeta() -> F9 {
        F9::new(1, 1)
    }

    /// `i = ζ²`.
    pub fn i() -> F9 {
        F9::zeta().pow(2)
    }

    pub fn is_in_f3(self) -> bool {
        self.parts().1 == 0
    }
}

impl Add for F9 {
    type Output = F9;
    fn add(self, o: F9) -> F9 {
        let ((a, b), (c, d)) = (self.parts(), o.parts());
        F9::new(a + c, b + d)
    }
}

impl Neg for F9 {
    type Output = F9;
    fn neg(self) -> F9 {
        let (a, b) = self.parts();
        F9::new(3 - a, 3 - b)
    }
}

impl Sub for F9 {
    type Output = F9;
    fn sub(self, o: F9) -> F9 {
        self + -o
    }
}

impl Mul for F9 {
    type Output = F9;
    fn mul(self, o: F9) -> F9 {
        let ((a, b), (c, d)) = (self.parts(), o.parts());
        // x² = -1
        F9::new(a * c + 2 * b * d, a * d + b * c)
    }
}

impl fmt::Display for F9 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.parts() {
            (a, 0) => write!(f, "{a}"),
            (0, b) => write!(f, "{b}x"),
            (a, b) => write!(f, "{a}+{b}x"),
        }
    }
}

/// `[[a, b], [c, d]]` over F9.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Mat2F9(pub [F9; 4]);

impl Mat2F9 {
    pub fn new(a: F9, b: F9, c: F9, d: F9) -> Self {
        Mat2F9([a, b, c, d])
    }

    pub fn scalar(l: F9) -> Self {
        Mat2F9([l, F9::ZERO, F9::ZERO, l])
    }

    pub fn identity() -> Self {
        Self::scalar(F9::ONE)
    }

    /// From entries in `{-1, 0, 1, 2}` read mod 3.
    pub fn from_f3(e: [i8; 4]) -> Self {
        let c = |v: i8| F9::new(v.rem_euclid(3) as u8, 0);
        Mat2F9([c(e[0]), c(e[1]), c(e[2]), c(e[3])])
    }

    pub fn code(&self) -> u16 {
        self.0.iter().rev().fold(0u16, |acc, e| acc * 9 + e.0 as u16)
    }

    pub fn from_code(mut c: u16) -> Self {
        let mut e = [F9::ZERO; 4];
        for x in e.iter_mut() {
            *x = F9((c % 9) as u8);
            c /= 9;
        }
        Mat2F9(e)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let [a, b, c, d] = self.0;
        let [e, f, g, h] = o.0;
        Mat2F9([
            a.mul(e).add(b.mul(g)),
            a.mul(f).add(b.mul(h)),
            c.mul(e).add(d.mul(g)),
            c.mul(f).add(d.mul(h)),
        ])
    }

    pub fn scale(&self, l: F9) -> Self {
        Mat2F9(self.0.map(|x| x.mul(l)))
    }

    pub fn det(&self) -> F9 {
        let [a, b, c, d] = self.0;
        a.mul(d).sub(b.mul(c))
    }

    pub fn inv(&self) -> Self {
        let [a, b, c, d] = self.0;
        Mat2F9([d, b.neg(), c.neg(), a]).scale(self.det().inv())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::identity(), |acc, _| acc.mul(self))
    }

    pub fn order(&self) -> u32 {
        let mut m = *self;
        let mut k = 1;
        while m != Self::identity() {
            m = m.mul(self);
            k += 1;
        }
        k
    }

    /// Representative of the class in `PGL2(F9)`: first nonzero entry 1.
    pub fn projective(&self) -> Self {
        let lead = *self.0.iter().find(|x| **x != F9::ZERO).expect("zero matrix");
        self.scale(lead.inv())
    }

    /// `λ` and `A ∈ GL2(F3)` with `self = λA`, when they exist.
    pub fn split_scalar(&self) -> Option<(F9, Mat2F9)> {
        F9::all().filter(|l| *l != F9::ZERO).find_map(|l| {
            let a = self.scale(l.inv());
            a.0.iter().all(|x| x.is_in_f3()).then_some((l, a))
        })
    }
}

pub fn s_matrix() -> Mat2F9 {
    Mat2F9::from_f3([1, 0, 0, -1])
}

pub fn t_matrix() -> Mat2F9 {
    Mat2F9::from_f3([1, -1, 1, 0])
}

/// A finite matrix group as an explicit, sorted element set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatGroup {
    pub generators: Vec<Mat2F9>,
    elements: BTreeSet<Mat2F9>,
}

impl MatGroup {
    /// Breadth-first closure under right multiplication by the generators.
    pub fn closure(generators: &[Mat2F9]) -> Self {
        assert!(generators.iter().all(|g| g.det() != F9::ZERO), "singular generator");
        let mut elements = BTreeSet::new();
        let mut queue = VecDeque::from([Mat2F9::identity()]);
        elements.insert(Mat2F9::identity());
        while let Some(x) = queue.pop_front() {
            for g in generators {
                let y = x.mul(g);
                if elements.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        MatGroup {
            generators: generators.to_vec(),
            elements,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, m: &Mat2F9) -> bool {
        self.elements.contains(m)
    }

    pub fn elements(&self) -> impl Iterator<Item = &Mat2F9> {
        self.elements.iter()
    }

    pub fn is_subgroup_of(&self, other: &MatGroup) -> bool {
        self.elements.is_subset(&other.elements)
    }

    pub fn same_elements(&self, other: &MatGroup) -> bool {
        self.elements == other.elements
    }

    /// The group generated by `self` and extra elements.
    pub fn extended(&self, extra: &[Mat2F9]) -> MatGroup {
        let mut gens = self.generators.clone();
        gens.extend_from_slice(extra);
        MatGroup::closure(&gens)
    }

    pub fn sl2_order(&self) -> usize {
        self.elements.iter().filter(|m| m.det() == F9::ONE).count()
    }

    pub fn projective_image(&self) -> BTreeSet<Mat2F9> {
        self.elements.iter().map(Mat2F9::projective).collect()
    }
}

/// `2^r S4^±` with `r = log2(|G| / 24)`, the sign fixed by `|G ∩ SL2|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OctahedralLabel {
    pub r: u32,
    pub plus: bool,
}

impl fmt::Display for OctahedralLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}S4{}", 1u32 << self.r, if self.plus { "+" } else { "-" })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HjkInfo {
    pub j: u32,
    pub k: u32,
    pub order: usize,
    pub sl2_order: usize,
    pub label: Option<OctahedralLabel>,
}

pub fn label_from_orders(order: usize, sl2_order: usize) -> Option<OctahedralLabel> {
    if !order.is_multiple_of(24) || !(order / 24).is_power_of_two() || order == 24 {
        return None;
    }
    let r = (order / 24).trailing_zeros();
    match sl2_order {
        24 => Some(OctahedralLabel { r, plus: true }),
        48 => Some(OctahedralLabel { r, plus: false }),
        _ => None,
    }
}

/// `H_{j,k} = ⟨ζ^j S, ζ^k T⟩`.
pub fn h_group(j: u32, k: u32) -> MatGroup {
    let z = F9::zeta();
    MatGroup::closure(&[s_matrix().scale(z.pow(j)), t_matrix().scale(z.pow(k))])
}

pub fn classify_hjk(j: u32, k: u32) -> HjkInfo {
    let g = h_group(j, k);
    let (order, sl2_order) = (g.order(), g.sl2_order());
    HjkInfo {
        j,
        k,
        order,
        sl2_order,
        label: label_from_orders(order, sl2_order),
    }
}

/// `G_1, ..., G_5`: `GL2(F3)` with `S` or `T` scaled by `ζ` or `i`.
pub fn g_groups() -> [MatGroup; 5] {
    let (s, t, z, i) = (s_matrix(), t_matrix(), F9::zeta(), F9::i());
    [
        MatGroup::closure(&[s, t]),
        MatGroup::closure(&[s.scale(z), t]),
        MatGroup::closure(&[s.scale(i), t]),
        MatGroup::closure(&[s, t.scale(i)]),
        MatGroup::closure(&[s, t.scale(z)]),
    ]
}

pub const EXPECTED_ORDERS: [(usize, usize); 5] = [(48, 24), (96, 24), (48, 48), (96, 48), (192, 48)];

fn check(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> CheckResult {
    CheckResult {
        name: name.into(),
        passed,
        detail: detail.into(),
    }
}

pub fn verify_lifting_groups() -> SuiteReport {
    let mut checks = Vec::new();
    let (s, t, z, i) = (s_matrix(), t_matrix(), F9::zeta(), F9::i());
    let z3 = z.pow(3);
    let minus = F9::ONE.neg();

    checks.push(check("zeta_primitive", z.pow(8) == F9::ONE && z.pow(4) == minus, format!("zeta = {z}")));
    checks.push(check("rel_zS_cubed", s.scale(z).pow(3) == s.scale(z3), "(zS)^3 = z^3 S"));
    checks.push(check("rel_z3S_cubed", s.scale(z3).pow(3) == s.scale(z), "(z^3 S)^3 = zS"));
    checks.push(check("rel_zT_seventh", t.scale(z).pow(7) == t.scale(z3.neg()), "(zT)^7 = -z^3 T"));
    checks.push(check("rel_z3T_seventh", t.scale(z3).pow(7) == t.scale(z.neg()), "(z^3 T)^7 = -zT"));

    let g = g_groups();
    let h = |j, k| h_group(j, k);
    let gl2f3 = &g[0];
    let i_gl = gl2f3.extended(&[Mat2F9::scalar(i)]);
    let f9_gl = gl2f3.extended(&[Mat2F9::scalar(z)]);
    checks.push(check("H10_eq_H12", h(1, 0).same_elements(&h(1, 2)) && h(1, 0).same_elements(&g[1]), "G2 = H10 = H12"));
    checks.push(check("H20_is_G3", h(2, 0).same_elements(&g[2]), "G3 = H20"));
    checks.push(check(
        "H02_eq_H22",
        h(0, 2).same_elements(&h(2, 2)) && h(0, 2).same_elements(&i_gl) && g[3].same_elements(&i_gl),
        "G4 = H02 = H22 = <i>GL2(F3)",
    ));
    checks.push(check(
        "H01_eq_H11_eq_H21",
        h(0, 1).same_elements(&h(1, 1)) && h(1, 1).same_elements(&h(2, 1)) && h(0, 1).same_elements(&f9_gl) && g[4].same_elements(&f9_gl),
        "G5 = H01 = H11 = H21 = F9* GL2(F3)",
    ));
    checks.push(check(
        "i_times_G1_G3",
        g[0].extended(&[Mat2F9::scalar(i)]).same_elements(&g[3]) && g[2].extended(&[Mat2F9::scalar(i)]).same_elements(&g[3]),
        "<i>G1 = <i>G3 = G4",
    ));
    checks.push(check(
        "f9_times_G1_G3",
        g[0].extended(&[Mat2F9::scalar(z)]).same_elements(&g[4]) && g[2].extended(&[Mat2F9::scalar(z)]).same_elements(&g[4]),
        "F9* G1 = F9* G3 = G5",
    ));

    let minus_one = Mat2F9::scalar(minus);
    let mut missing = Vec::new();
    let mut reduced = true;
    for j in 0..8 {
        for k in 0..8 {
            let hjk = h(j, k);
            let exceptional = [0, 4].contains(&j) && [0, 4].contains(&k);
            if !exceptional && !hjk.contains(&minus_one) {
                missing.push(format!("({j},{k})"));
            }
            let with_sign = hjk.extended(&[minus_one]);
            if !g.iter().any(|gi| gi.same_elements(&with_sign)) {
                reduced = false;
            }
        }
    }
    checks.push(check("F3_star_in_Hjk", missing.is_empty(), format!("missing -1 in {missing:?}")));
    checks.push(check("reduces_to_five", reduced, "every F3* H_{j,k} is one of G1..G5"));

    let orders: Vec<(usize, usize)> = g.iter().map(|x| (x.order(), x.sl2_order())).collect();
    checks.push(check("order_table", orders == EXPECTED_ORDERS, format!("{orders:?}")));
    let labels: Vec<String> = orders
        .iter()
        .map(|&(o, s)| label_from_orders(o, s).map(|l| l.to_string()).unwrap_or_default())
        .collect();
    checks.push(check(
        "labels",
        labels == ["2S4+", "4S4+", "2S4-", "4S4-", "8S4-"],
        labels.join(", "),
    ));
    let sl2f3: BTreeSet<Mat2F9> = gl2f3.elements().filter(|m| m.det() == F9::ONE).copied().collect();
    checks.push(check(
        "G1_sl2_is_SL2F3",
        sl2f3.len() == 24 && sl2f3.iter().all(|m| m.0.iter().all(|x| x.is_in_f3())),
        "G1 ∩ SL2(F9) = SL2(F3)",
    ));
    checks.push(check("G3_in_SL2", g[2].elements().all(|m| m.det() == F9::ONE), "G3 ⊂ SL2(F9)"));
    checks.push(check(
        "G2_G4_maximal_in_G5",
        [&g[1], &g[3]].iter().all(|x| x.is_subgroup_of(&g[4]) && g[4].order() == 2 * x.order()),
        "index 2 subgroups",
    ));
    let image = gl2f3.projective_image();
    checks.push(check(
        "same_projective_image",
        image.len() == 24 && g.iter().all(|x| x.projective_image() == image),
        "pi(G_j) = pi(GL2(F3))",
    ));
    SuiteReport { checks }
}

/// Which of `φ`, `f1`, `f2` is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum OuterMap {
    Phi,
    F1,
    F2,
}

impl OuterMap {
    pub fn apply(self, m: &Mat2F9) -> Option<Mat2F9> {
        match self {
            OuterMap::Phi => {
                let (_, a) = m.split_scalar()?;
                Some(m.scale(a.det()))
            }
            OuterMap::F1 => Some(m.scale(m.det())),
            OuterMap::F2 => Some(m.scale(m.det().pow(2))),
        }
    }
}

impl fmt::Display for OuterMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OuterMap::Phi => "phi",
            OuterMap::F1 => "f1",
            OuterMap::F2 => "f2",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MapCheck {
    /// A bijective homomorphism of the group onto itself.
    pub automorphism: bool,
    pub inner: bool,
    pub square_inner: bool,
}

fn inner_by(group: &MatGroup, images: &[(Mat2F9, Mat2F9)]) -> bool {
    group.elements().any(|g| {
        let gi = g.inv();
        images.iter().all(|(x, y)| g.mul(x).mul(&gi) == *y)
    })
}

/// Checks one map on one group; `None` when it is not defined there.
pub fn check_map(group: &MatGroup, map: OuterMap) -> Option<MapCheck> {
    let mut image = BTreeSet::new();
    for x in group.elements() {
        let y = map.apply(x)?;
        if !group.contains(&y) {
            return Some(MapCheck {
                automorphism: false,
                inner: false,
                square_inner: false,
            });
        }
        image.insert(y);
    }
    let bijective = image.len() == group.order();
    let hom = group
        .elements()
        .all(|x| group.elements().all(|y| map.apply(&x.mul(y)) == Some(map.apply(x).unwrap().mul(&map.apply(y).unwrap()))));
    let gens: Vec<(Mat2F9, Mat2F9)> = group.generators.iter().map(|x| (*x, map.apply(x).unwrap())).collect();
    let squares: Vec<(Mat2F9, Mat2F9)> = group
        .generators
        .iter()
        .map(|x| (*x, map.apply(&map.apply(x).unwrap()).unwrap()))
        .collect();
    Some(MapCheck {
        automorphism: bijective && hom,
        inner: inner_by(group, &gens),
        square_inner: inner_by(group, &squares),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvolutionReport {
    pub group: usize,
    pub checks: Vec<(OuterMap, MapCheck)>,
    /// The maps expected to be outer involutions of `G`.
    pub expected: Vec<OuterMap>,
}

impl InvolutionReport {
    /// Every expected map is an automorphism, not inner, with inner square.
    pub fn passed(&self) -> bool {
        self.expected.iter().all(|m| {
            self.checks
                .iter()
                .any(|(n, c)| n == m && c.automorphism && !c.inner && c.square_inner)
        })
    }
}

pub fn expected_outer(group: usize) -> Vec<OuterMap> {
    use OuterMap::*;
    match group {
        1 => vec![F1],
        2 => vec![F1, F2],
        3 => vec![Phi],
        4 => vec![Phi, F1],
        _ => vec![Phi, F1, F2],
    }
}

/// `group` is `1..=5`, indexing `G_1..G_5`.
pub fn verify_outer_involutions(group: usize) -> InvolutionReport {
    let g = &g_groups()[group - 1];
    let checks = [OuterMap::Phi, OuterMap::F1, OuterMap::F2]
        .into_iter()
        .filter_map(|m| check_map(g, m).map(|c| (m, c)))
        .collect();
    InvolutionReport {
        group,
        checks,
        expected: expected_outer(group),
    }
}

pub fn gl2_generators() -> [Mat2F9; 2] {
    let z = F9::zeta();
    [
        Mat2F9::new(z, F9::ZERO, F9::ZERO, F9::ONE),
        Mat2F9::new(F9::ONE.neg(), F9::ONE, F9::ONE.neg(), F9::ZERO),
    ]
}

/// `(|GL2(F9)|, |SL2(F9)|)` from the closure of a generating pair.
pub fn gl2_orders() -> (usize, usize) {
    let g = MatGroup::closure(&gl2_generators());
    (g.order(), g.sl2_order())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugacyReport {
    pub pgl2_order: usize,
    pub s4_subgroups: usize,
    pub classes: usize,
}

/// Enumerates the `S4 ≅ ⟨a, b | a⁴, b³, (ab)²⟩` subgroups of `PGL2(F9)` and
/// counts their conjugacy classes.
pub fn s4_conjugacy() -> ConjugacyReport {
    let gl = MatGroup::closure(&gl2_generators());
    let pgl: Vec<Mat2F9> = gl.projective_image().into_iter().collect();
    let pmul = |a: &Mat2F9, b: &Mat2F9| a.mul(b).projective();
    let porder = |a: &Mat2F9| {
        let id = Mat2F9::identity();
        let mut m = *a;
        let mut k = 1;
        while m != id {
            m = pmul(&m, a);
            k += 1;
        }
        k
    };
    let orders: Vec<u32> = pgl.iter().map(porder).collect();
    let fours: Vec<&Mat2F9> = pgl.iter().zip(&orders).filter(|(_, o)| **o == 4).map(|(m, _)| m).collect();
    let threes: Vec<&Mat2F9> = pgl.iter().zip(&orders).filter(|(_, o)| **o == 3).map(|(m, _)| m).collect();
    let close = |gens: &[Mat2F9]| -> BTreeSet<Mat2F9> {
        let mut set = BTreeSet::from([Mat2F9::identity()]);
        let mut queue = VecDeque::from([Mat2F9::identity()]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = pmul(&x, g);
                if set.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        set
    };
    let mut subgroups: BTreeSet<BTreeSet<Mat2F9>> = BTreeSet::new();
    for a in &fours {
        for b in &threes {
            let ab = pmul(a, b);
            if pmul(&ab, &ab) != Mat2F9::identity() {
                continue;
            }
            let h = close(&[**a, **b]);
            if h.len() == 24 {
                subgroups.insert(h);
            }
        }
    }
    let mut remaining = subgroups.clone();
    let mut classes = 0;
    while let Some(h) = remaining.iter().next().cloned() {
        classes += 1;
        for g in &pgl {
            let gi = g.inv();
            let conj: BTreeSet<Mat2F9> = h.iter().map(|x| g.mul(x).mul(&gi).projective()).collect();
            remaining.remove(&conj);
        }
    }
    ConjugacyReport {
        pgl2_order: pgl.len(),
        s4_subgroups: subgroups.len(),
        classes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms() {
        for a in F9::all() {
            assert_eq!(a.add(a.neg()), F9::ZERO);
            if a != F9::ZERO {
                assert_eq!(a.mul(a.inv()), F9::ONE);
            }
            for b in F9::all() {
                assert_eq!(a.mul(b), b.mul(a));
                for c in F9::all() {
                    assert_eq!(a.mul(b.add(c)), a.mul(b).add(a.mul(c)));
                }
            }
        }
        assert_eq!(F9::zeta().pow(4), F9::ONE.neg());
        assert_eq!(F9::i().pow(2), F9::ONE.neg());
    }

    #[test]
    fn codes_round_trip() {
        for c in (0..6561).step_by(7) {
            assert_eq!(Mat2F9::from_code(c).code(), c);
        }
    }

    #[test]
    fn closure_examples() {
        assert_eq!(MatGroup::closure(&[Mat2F9::identity()]).order(), 1);
        assert_eq!(MatGroup::closure(&[s_matrix(), t_matrix()]).order(), 48);
        assert_eq!(h_group(0, 1).order(), 192);
        assert_eq!(s_matrix().order(), 2);
        assert_eq!(t_matrix().order(), 6);
    }

    #[test]
    fn hjk_examples() {
        let c = classify_hjk(0, 0);
        assert_eq!((c.order, c.sl2_order, c.label.unwrap().to_string()), (48, 24, "2S4+".into()));
        let c = classify_hjk(1, 0);
        assert_eq!((c.order, c.sl2_order, c.label.unwrap().to_string()), (96, 24, "4S4+".into()));
        let c = classify_hjk(2, 0);
        assert_eq!((c.order, c.sl2_order, c.label.unwrap().to_string()), (48, 48, "2S4-".into()));
    }

    #[test]
    fn gl2_sizes() {
        assert_eq!(gl2_orders(), (5760, 720));
    }

    #[test]
    fn lifting_group_checks() {
        let r = verify_lifting_groups();
        assert!(r.all_passed(), "{:?}", r.checks.iter().filter(|c| !c.passed).collect::<Vec<_>>());
    }

    #[test]
    fn outer_maps() {
        for g in 1..=5 {
            let r = verify_outer_involutions(g);
            assert!(r.passed(), "G{g}: {:?}", r.checks);
        }
    }

    #[test]
    fn single_s4_class() {
        let r = s4_conjugacy();
        assert_eq!(r.pgl2_order, 720);
        assert_eq!(r.classes, 1, "{r:?}");
    }
}
