//! The Malvenuto–Reutenauer algebra of permutations, its dendriform
//! half-shuffles, and the two charts φ and θ from the tensor coalgebra on
//! irreducible permutations.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use cha_combinatorics::perm::{self, Permutation};
use cha_core::error::check_bound;
use cha_core::hopf::{coproduct_of, product_of};
use cha_core::linalg::Echelon;
use cha_core::scalar::one;
use cha_core::{Algebra, Coalgebra, Error, Graded, LinComb, Report, Result};
use cha_dipt_dend::idempotent::{e_dend, e_inf};
use cha_dipt_dend::{Dendriform, Dipterous};
use cha_multibrace::relations::check_r;
use cha_multibrace::{mb_to_product, product_to_mb, ChaProduct, MbStructure};

pub type MrElement = LinComb<Permutation>;

/// Σ (σ×τ)∘δ⁻¹ over the (n,m)-shuffles δ accepted by `keep`.
fn shuffle_sum(s: &Permutation, t: &Permutation, keep: impl Fn(&Permutation) -> bool) -> MrElement {
    let cross = s.cross(t);
    perm::shuffles(s.len(), t.len())
        .into_iter()
        .filter(|d| keep(d))
        .map(|d| (cross.compose(&d.inverse()), one()))
        .collect()
}

pub fn mr_product(s: &Permutation, t: &Permutation) -> MrElement {
    shuffle_sum(s, t, |_| true)
}

/// Σ_i std(σ(1)…σ(i)) ⊗ std(σ(i+1)…σ(n)).
pub fn mr_coproduct(s: &Permutation) -> LinComb<(Permutation, Permutation)> {
    let w = s.word();
    (0..=w.len())
        .map(|i| {
            let left = perm::std(&w[..i]).expect("entries are distinct");
            let right = perm::std(&w[i..]).expect("entries are distinct");
            ((left, right), one())
        })
        .collect()
}

/// (σ≻τ, σ≺τ): ≻ keeps the shuffles fixing n+m, ≺ those sending n to n+m.
pub fn mr_half_shuffles(s: &Permutation, t: &Permutation) -> Result<(MrElement, MrElement)> {
    if s.is_empty() || t.is_empty() {
        return Err(Error::invalid("half-shuffles need two nonempty permutations"));
    }
    let (n, m) = (s.len(), t.len());
    let succ = shuffle_sum(s, t, |d| d.at(n + m) == n + m);
    let prec = shuffle_sum(s, t, |d| d.at(n) == n + m);
    Ok((succ, prec))
}

/// H_MR with its shuffle product, standardized deconcatenation and the
/// half-shuffle dendriform structure.
#[derive(Clone, Copy, Debug, Default)]
pub struct MalvenutoReutenauer;

impl Graded for MalvenutoReutenauer {
    type Key = Permutation;
    fn unit(&self) -> Permutation {
        Permutation::default()
    }
    fn degree(&self, k: &Permutation) -> usize {
        k.len()
    }
}

impl Algebra for MalvenutoReutenauer {
    fn product(&self, a: &Permutation, b: &Permutation) -> MrElement {
        mr_product(a, b)
    }
}

impl Coalgebra for MalvenutoReutenauer {
    fn coproduct(&self, k: &Permutation) -> LinComb<(Permutation, Permutation)> {
        mr_coproduct(k)
    }
}

impl Dipterous for MalvenutoReutenauer {
    fn succ(&self, a: &Permutation, b: &Permutation) -> Result<MrElement> {
        match (a.is_empty(), b.is_empty()) {
            (true, true) => Err(Error::UnitProduct("1 ≻ 1")),
            (true, false) => Ok(LinComb::basis(b.clone())),
            (false, true) => Ok(LinComb::zero()),
            (false, false) => Ok(mr_half_shuffles(a, b)?.0),
        }
    }
}

impl Dendriform for MalvenutoReutenauer {
    fn prec(&self, a: &Permutation, b: &Permutation) -> Result<MrElement> {
        match (a.is_empty(), b.is_empty()) {
            (true, true) => Err(Error::UnitProduct("1 ≺ 1")),
            (true, false) => Ok(LinComb::zero()),
            (false, true) => Ok(LinComb::basis(a.clone())),
            (false, false) => Ok(mr_half_shuffles(a, b)?.1),
        }
    }
}

fn cross_lin(x: &MrElement, y: &MrElement) -> MrElement {
    x.bilinear(y, |a, b| LinComb::basis(a.cross(b)))
}

/// e_inf(x) = Σ_i (−1)^{i+1} ×^i ∘ Δ̄^i(x).
pub fn mr_e_inf(x: &MrElement, bound: usize) -> Result<MrElement> {
    e_inf(&MalvenutoReutenauer, |a, b| LinComb::basis(a.cross(b)), x, bound)
}

/// The dendriform idempotent e built on ≻.
pub fn mr_e(x: &MrElement, bound: usize) -> Result<MrElement> {
    e_dend(&MalvenutoReutenauer, x, bound)
}

fn check_letters(word: &[Permutation], bound: usize) -> Result<()> {
    if let Some(bad) = word.iter().find(|s| !s.is_irreducible()) {
        return Err(Error::invalid(format!("{bad} is not an irreducible permutation")));
    }
    check_bound(word.iter().map(Permutation::len).sum(), bound)
}

/// φ(σ_1⊗…⊗σ_m) = e_inf(σ_1)×…×e_inf(σ_m).
pub fn mr_phi(word: &[Permutation], bound: usize) -> Result<MrElement> {
    check_letters(word, bound)?;
    let mut acc = LinComb::basis(Permutation::default());
    for s in word {
        acc = cross_lin(&acc, &mr_e_inf(&LinComb::basis(s.clone()), bound)?);
    }
    Ok(acc)
}

/// θ(σ_1⊗…⊗σ_m) = ((e(σ_1)≻e(σ_2))…)≻e(σ_m).
pub fn mr_theta(word: &[Permutation], bound: usize) -> Result<MrElement> {
    check_letters(word, bound)?;
    let Some((first, rest)) = word.split_first() else {
        return Ok(LinComb::basis(Permutation::default()));
    };
    let mut acc = mr_e(&LinComb::basis(first.clone()), bound)?;
    for s in rest {
        let e = mr_e(&LinComb::basis(s.clone()), bound)?;
        acc = cha_dipt_dend::context::succ_lin(&MalvenutoReutenauer, &acc, &e)?;
    }
    Ok(acc)
}

/// Words of irreducible permutations of total size `n`.
pub fn irreducible_words(n: usize) -> Vec<Vec<Permutation>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for s in perm::irreducibles(first) {
            for rest in irreducible_words(n - first) {
                let mut w = vec![s.clone()];
                w.extend(rest);
                out.push(w);
            }
        }
    }
    out
}

pub fn word_degree(word: &[Permutation]) -> usize {
    word.iter().map(Permutation::len).sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Chart {
    Phi,
    Theta,
}

impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Chart::Phi => "phi",
            Chart::Theta => "theta",
        })
    }
}

struct DegreeData {
    words: Vec<Vec<Permutation>>,
    echelon: Echelon<Permutation>,
}

/// One of the two coalgebra isomorphisms T^c(⊕ K[Irr_n]) → H_MR, with its
/// degreewise inverse by row reduction.
pub struct MrChart {
    chart: Chart,
    bound: usize,
    degrees: Mutex<HashMap<usize, Arc<DegreeData>>>,
    images: Mutex<HashMap<Vec<Permutation>, MrElement>>,
}

impl MrChart {
    pub fn new(chart: Chart, bound: usize) -> Self {
        MrChart { chart, bound, degrees: Mutex::new(HashMap::new()), images: Mutex::new(HashMap::new()) }
    }

    pub fn chart(&self) -> Chart {
        self.chart
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn image(&self, word: &[Permutation]) -> Result<MrElement> {
        if let Some(hit) = self.images.lock().unwrap().get(word) {
            return Ok(hit.clone());
        }
        let value = match self.chart {
            Chart::Phi => mr_phi(word, self.bound)?,
            Chart::Theta => mr_theta(word, self.bound)?,
        };
        self.images.lock().unwrap().insert(word.to_vec(), value.clone());
        Ok(value)
    }

    pub fn image_lin(&self, x: &LinComb<Vec<Permutation>>) -> Result<MrElement> {
        x.try_map_linear(|w| self.image(w))
    }

    fn degree_data(&self, n: usize) -> Result<Arc<DegreeData>> {
        check_bound(n, self.bound)?;
        if let Some(hit) = self.degrees.lock().unwrap().get(&n) {
            return Ok(hit.clone());
        }
        let words = irreducible_words(n);
        let mut echelon = Echelon::new();
        for w in &words {
            if !echelon.insert(&self.image(w)?) {
                return Err(Error::invalid(format!("{} is not injective in degree {n}", self.chart)));
            }
        }
        let data = Arc::new(DegreeData { words, echelon });
        self.degrees.lock().unwrap().insert(n, data.clone());
        Ok(data)
    }

    /// Rank of the chart in degree n (n! when it is bijective).
    pub fn rank(&self, n: usize) -> Result<usize> {
        Ok(self.degree_data(n)?.echelon.rank())
    }

    pub fn preimage(&self, x: &MrElement) -> Result<LinComb<Vec<Permutation>>> {
        let mut by_degree: HashMap<usize, MrElement> = HashMap::new();
        for (s, c) in x.iter() {
            by_degree.entry(s.len()).or_default().add_term(s.clone(), c.clone());
        }
        let mut out = LinComb::zero();
        for (n, part) in by_degree {
            let data = self.degree_data(n)?;
            let coords = data.echelon.solve(&part).expect("bijective charts reach every element");
            out += coords.map_keys(|&i| data.words[i].clone());
        }
        Ok(out)
    }

    /// Δ(Ψ(w)) = Σ Ψ(w_1…w_i) ⊗ Ψ(w_{i+1}…w_m) on one word.
    pub fn is_coalgebra_map_on(&self, word: &[Permutation]) -> Result<bool> {
        let left = coproduct_of(&MalvenutoReutenauer, &self.image(word)?);
        let mut right = LinComb::zero();
        for i in 0..=word.len() {
            right += self.image(&word[..i])?.tensor(&self.image(&word[i..])?);
        }
        Ok(left == right)
    }
}

/// u*v = Ψ⁻¹(Ψ(u)*Ψ(v)) on T^c(⊕ K[Irr_n]), truncated at the chart's bound.
pub fn transported_product(chart: Arc<MrChart>) -> ChaProduct<Permutation> {
    let bound = chart.bound();
    let alphabet: Vec<Permutation> = (1..=bound).flat_map(perm::irreducibles).collect();
    ChaProduct::new(bound, alphabet, move |u, v| {
        check_bound(word_degree(u) + word_degree(v), chart.bound())?;
        let prod = product_of(&MalvenutoReutenauer, &chart.image(u)?, &chart.image(v)?);
        chart.preimage(&prod)
    })
}

fn format_word(w: &[Permutation]) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    w.iter().map(|s| s.to_string()).collect::<Vec<_>>().join("|")
}

pub fn format_tensor(x: &LinComb<Vec<Permutation>>) -> String {
    x.format_with(|w| format_word(w))
}

/// Nonempty pairs of words (u, v) with deg u + deg v = n.
fn word_pairs(n: usize) -> Vec<(Vec<Permutation>, Vec<Permutation>)> {
    let mut out = Vec::new();
    for a in 0..=n {
        for u in irreducible_words(a) {
            for v in irreducible_words(n - a) {
                out.push((u.clone(), v));
            }
        }
    }
    out
}

/// First degree-`n` word on which φ and θ differ.
pub fn chart_difference(phi: &MrChart, theta: &MrChart, n: usize) -> Result<Option<(Vec<Permutation>, MrElement)>> {
    for w in irreducible_words(n) {
        let diff = phi.image(&w)? - theta.image(&w)?;
        if !diff.is_zero() {
            return Ok(Some((w, diff)));
        }
    }
    Ok(None)
}

/// First pair (u, v) on which the two extracted structures differ.
pub fn structure_difference(
    phi: &MbStructure<Permutation>,
    theta: &MbStructure<Permutation>,
    n: usize,
) -> Option<(Vec<Permutation>, Vec<Permutation>, LinComb<Permutation>, LinComb<Permutation>)> {
    word_pairs(n).into_iter().find_map(|(u, v)| {
        let (a, b) = (phi.m(&u, &v), theta.m(&u, &v));
        (a != b).then_some((u, v, a, b))
    })
}

/// Both charts: degreewise bijectivity, coalgebra maps, the relations R on
/// the extracted multibrace data, the reconstruction round trip, the
/// vanishing of M_pq (p ≥ 2) for θ, and the comparison of φ with θ.
pub fn mr_extract_structures(maxdeg: usize) -> Result<Report> {
    check_bound(maxdeg, 5)?;
    let mut report = Report::new("mr-structures");
    let phi = Arc::new(MrChart::new(Chart::Phi, maxdeg));
    let theta = Arc::new(MrChart::new(Chart::Theta, maxdeg));
    let mut extracted = Vec::new();
    for chart in [&phi, &theta] {
        let name = chart.chart();
        let ranks: Vec<usize> = (1..=maxdeg).map(|n| chart.rank(n)).collect::<Result<_>>()?;
        let full = ranks.iter().enumerate().all(|(i, &r)| Some(r) == (1..=i + 1).try_fold(1usize, |a, b| a.checked_mul(b)));
        report.push(format!("{name}-bijective"), full, format!("ranks {ranks:?}"));
        let mut coalgebra = None;
        'words: for n in 1..=maxdeg {
            for w in irreducible_words(n) {
                if !chart.is_coalgebra_map_on(&w)? {
                    coalgebra = Some(format_word(&w));
                    break 'words;
                }
            }
        }
        match coalgebra {
            None => report.pass(format!("{name}-coalgebra-map")),
            Some(w) => report.fail(format!("{name}-coalgebra-map"), w),
        }
        let star = transported_product(chart.clone());
        let mb = product_to_mb(&star);
        report.merge(check_r_weighted(&mb, maxdeg, &name.to_string())?);
        let mut round_trip = None;
        let mut higher = None;
        for n in 1..=maxdeg {
            for (u, v) in word_pairs(n) {
                if round_trip.is_none() && mb_to_product(&mb, &u, &v)? != star.mul(&u, &v)? {
                    round_trip = Some(format!("{} * {}", format_word(&u), format_word(&v)));
                }
                if higher.is_none() && u.len() >= 2 {
                    let value = mb.m(&u, &v);
                    if !value.is_zero() {
                        higher = Some(format!("M_{}{}({}; {}) = {}", u.len(), v.len(), format_word(&u), format_word(&v), value));
                    }
                }
            }
        }
        match round_trip {
            None => report.pass(format!("{name}-round-trip")),
            Some(w) => report.fail(format!("{name}-round-trip"), w),
        }
        match (name, higher) {
            (Chart::Theta, None) => report.pass("theta-right-sided"),
            (Chart::Theta, Some(w)) => report.fail("theta-right-sided", w),
            (Chart::Phi, None) => report.note("phi-higher-operations", "M_pq = 0 for p >= 2 in the checked range"),
            (Chart::Phi, Some(w)) => report.note("phi-higher-operations", format!("nonzero: {w}")),
        }
        extracted.push(mb);
    }
    for n in 1..=maxdeg {
        let maps = chart_difference(&phi, &theta, n)?;
        let structures = structure_difference(&extracted[0], &extracted[1], n);
        let detail = match (&maps, &structures) {
            (None, None) => "phi = theta and the extracted structures agree".to_string(),
            _ => {
                let mut parts = Vec::new();
                if let Some((w, d)) = &maps {
                    parts.push(format!("phi - theta on {} = {}", format_word(w), d));
                }
                if let Some((u, v, a, b)) = &structures {
                    parts.push(format!("M({}; {}) = {} for phi, {} for theta", format_word(u), format_word(v), a, b));
                }
                parts.join("; ")
            }
        };
        let same = maps.is_none() && structures.is_none();
        if n <= 3 {
            report.push(format!("agree-deg-{n}"), same, detail);
        } else {
            report.push(format!("differ-deg-{n}"), !same, detail);
        }
    }
    Ok(report)
}

/// R_ijk on all triples of words of total degree ≤ maxdeg.
pub fn check_r_weighted(mb: &MbStructure<Permutation>, maxdeg: usize, label: &str) -> Result<Report> {
    let mut groups: HashMap<(usize, usize, usize), Vec<(Vec<Permutation>, Vec<Permutation>, Vec<Permutation>)>> =
        HashMap::new();
    for a in 1..=maxdeg {
        for b in 1..=maxdeg - a {
            for c in 1..=(maxdeg - a - b) {
                for u in irreducible_words(a) {
                    for v in irreducible_words(b) {
                        for w in irreducible_words(c) {
                            groups.entry((u.len(), v.len(), w.len())).or_default().push((u.clone(), v.clone(), w));
                        }
                    }
                }
            }
        }
    }
    let mut keys: Vec<_> = groups.keys().copied().collect();
    keys.sort();
    let mut report = Report::new(format!("{label}-R"));
    for (i, j, k) in keys {
        let r = check_r(mb, i, j, k, &groups[&(i, j, k)])?;
        for check in r.checks {
            report.push(format!("{label}-{}", check.id), check.pass, check.detail);
        }
    }
    Ok(report)
}
