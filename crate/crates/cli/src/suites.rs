//! Named verification suites and the fixtures they run on.

use std::fmt::Display;
use std::sync::Arc;

use cha_combinatorics::perm;
use cha_combinatorics::rooted::{self, RTree};
use cha_combinatorics::unreduced::Labeled;
use cha_combinatorics::{catalan, planar, series, series_parallel};
use cha_core::hopf::product_of;
use cha_core::scalar::frac;
use cha_core::{Algebra, Coalgebra, Key, LinComb, Report, Result, SymWord};
use cha_dipt_dend::context::{prec_lin, succ_lin, Dendriform};
use cha_dipt_dend::dims::{brace_dims, check_series, dend_dims, dipt_dims, mb_dims};
use cha_dipt_dend::extract::{brace_from_dend, mb_from_dipt};
use cha_dipt_dend::idempotent::{check_idempotent, primitive_dimension};
use cha_dipt_dend::recursions::check_dipterous_recursions;
use cha_dipt_dend::{DendTree, DiptMono, FreeDend, FreeDipt};
use cha_multibrace::operad::{brace_compose, check_confluence, check_operad_axioms, insert, parse_element, Tree};
use cha_multibrace::product::{check_associative, check_hopf};
use cha_multibrace::relations::{check_brace_all, check_r, check_r_all, check_rightsided};
use cha_multibrace::{BraceStructure, ChaProduct, MbStructure};
use cha_symmetric::ck::{forests, format_forest, parse_forest, tree_coproduct, ConnesKreimer, Forest};
use cha_symmetric::comas::PolynomialComAs;
use cha_symmetric::eulerian::check_eulerian;
use cha_symmetric::prelie::{check_symmetric_brace, FreePreLie};
use cha_symmetric::smb::{self, check_sr_all, check_sr_displayed, sr111, sr112, sr121, sr211};
use cha_symmetric::uea::SymmetrizedUea;
use cha_symmetric::{comas_to_smb, grossman_larson, guin_oudom, lie_to_smb, pairing_gl_ck, LieAlgebra, SmbStructure, Uea};
use cha_zoo::fdb::{check_fdb_braces, check_fdb_coproduct, check_fdb_prelie, fdb_coproduct, fdb_cross_check, fdb_cross_check_shifted, FaaDiBruno};
use cha_zoo::mr::{mr_extract_structures, MalvenutoReutenauer};
use cha_zoo::qsym::{compositions, qsym_ctd_check, qsym_mb_check, qsym_tensor_product, Qsym};

pub const SUITES: &[&str] = &[
    "R",
    "mb-equivalence",
    "brace",
    "rightsided",
    "dipt",
    "dend",
    "idempotent",
    "recursions",
    "series",
    "sr111",
    "sr112",
    "sr121",
    "sr211",
    "sr",
    "lie-formulas",
    "eulerian",
    "symmetric-brace",
    "gl",
    "ck",
    "pairing",
    "operad",
    "confluence",
    "mr",
    "fdb",
    "qsym",
    "ctd",
];

/// Runs the named suite with truncation `maxdeg`; `seed` drives the
/// randomized rewriting strategies of the confluence suite.
pub fn run_suite(name: &str, maxdeg: usize, seed: u64) -> Result<Report> {
    match name {
        "R" => r_relations(maxdeg),
        "mb-equivalence" => mb_equivalence(maxdeg),
        "brace" => brace_relations(maxdeg),
        "rightsided" => rightsided(maxdeg),
        "dipt" => Ok(dipterous_laws(maxdeg)),
        "dend" => Ok(dendriform_laws(maxdeg)),
        "idempotent" => Ok(idempotent(maxdeg)),
        "recursions" => Ok(check_dipterous_recursions(maxdeg.max(5))),
        "series" => Ok(series_identities(maxdeg)),
        "sr111" | "sr112" | "sr121" | "sr211" => Ok(sr_instance(name)),
        "sr" => sr_relations(maxdeg),
        "lie-formulas" => Ok(lie_formulas()),
        "eulerian" => eulerian(),
        "symmetric-brace" => symmetric_braces(maxdeg),
        "gl" => grossman_larson_suite(maxdeg),
        "ck" => Ok(connes_kreimer(maxdeg)),
        "pairing" => pairing_gl_ck(maxdeg.min(4)),
        "operad" => Ok(operad(maxdeg + 1)),
        "confluence" => Ok(check_confluence(maxdeg, 8, seed)),
        "mr" => malvenuto_reutenauer(maxdeg),
        "fdb" => faa_di_bruno(maxdeg),
        "qsym" => Ok(quasi_symmetric(maxdeg)),
        "ctd" => qsym_ctd_check(maxdeg),
        other => Err(cha_core::Error::invalid(format!("unknown suite `{other}`; known: {}", SUITES.join(", ")))),
    }
}

// ---------------------------------------------------------------------------
// multibrace fixtures

pub fn quasi_shuffle_mb() -> MbStructure<u32> {
    MbStructure::new(6, |u, v| if u.len() == 1 && v.len() == 1 { LinComb::basis(u[0] + v[0]) } else { LinComb::zero() })
}

/// M_11(a;b) = 2a + b and nothing else; R_111 fails.
pub fn skewed_mb() -> MbStructure<u32> {
    MbStructure::new(6, |u, v| if u.len() == 1 && v.len() == 1 { LinComb::basis(2 * u[0] + v[0]) } else { LinComb::zero() })
}

pub fn free_brace() -> BraceStructure<Tree> {
    BraceStructure::new(6, |x, ys| insert(x, ys))
}

pub fn tree_leaves(n: u32) -> Vec<Tree> {
    (1..=n).map(Labeled::leaf).collect()
}

pub fn dipt_generators(n: u32) -> Vec<DiptMono> {
    (1..=n).map(DiptMono::generator).collect()
}

fn mb_fixture<G: Key>(name: &str, m: MbStructure<G>, alphabet: Vec<G>, maxdeg: usize) -> Result<Report> {
    let mut report = Report::new(name);
    report.merge(check_r_all(&m, &alphabet, maxdeg)?);
    let star = ChaProduct::from_mb(m, alphabet);
    report.merge(check_associative(&star, maxdeg));
    report.merge(check_hopf(&star, maxdeg));
    Ok(report)
}

/// Each passing fixture with the associativity and Hopf checks of its product.
pub fn mb_passing_fixtures(maxdeg: usize) -> Result<Vec<Report>> {
    Ok(vec![
        mb_fixture("trivial", MbStructure::<u32>::trivial(6), vec![1, 2, 3], maxdeg)?,
        mb_fixture("quasi-shuffle", quasi_shuffle_mb(), vec![1, 2], maxdeg)?,
        mb_fixture("free-brace", free_brace().into_mb(), tree_leaves(3), maxdeg)?,
        mb_fixture("free-dipterous", mb_from_dipt(Arc::new(FreeDipt::new()), 6), dipt_generators(2), maxdeg)?,
    ])
}

fn r_relations(maxdeg: usize) -> Result<Report> {
    let mut report = Report::new("R");
    report.merge(check_r_all(&MbStructure::<u32>::trivial(6), &[1, 2, 3], maxdeg)?.renamed("trivial"));
    report.merge(check_r_all(&quasi_shuffle_mb(), &[1, 2], maxdeg)?.renamed("quasi-shuffle"));
    report.merge(check_r_all(&free_brace().into_mb(), &tree_leaves(3), maxdeg)?.renamed("free-brace"));
    report.merge(check_r_all(&mb_from_dipt(Arc::new(FreeDipt::new()), 6), &dipt_generators(3), maxdeg)?.renamed("free-dipterous"));
    Ok(report)
}

/// The violating fixture: R_111 fails on letters, associativity fails in
/// degree 3 and holds below.
pub fn mb_violation() -> Result<Report> {
    let mut report = Report::new("skewed");
    let m = skewed_mb();
    let r111 = check_r(&m, 1, 1, 1, &[(vec![1], vec![2], vec![4])])?;
    report.push("R111-fails", !r111.ok(), r111.failures().map(|c| c.detail.clone()).collect::<Vec<_>>().join("; "));
    let star = ChaProduct::from_mb(m, vec![1, 2, 3]);
    let assoc = check_associative(&star, 3);
    let degree = |id: &str| id.split('-').filter_map(|d| d.parse::<usize>().ok()).sum::<usize>();
    let failing: Vec<&str> = assoc.failures().map(|c| c.id.as_str()).collect();
    report.push(
        "associativity-fails-deg-3",
        !failing.is_empty() && failing.iter().all(|id| degree(id) == 3),
        format!("failing splittings: {}", failing.join(", ")),
    );
    Ok(report)
}

fn mb_equivalence(maxdeg: usize) -> Result<Report> {
    let mut report = Report::new("mb-equivalence");
    for r in mb_passing_fixtures(maxdeg)? {
        report.merge(r);
    }
    report.merge(mb_violation()?);
    Ok(report)
}

fn brace_relations(maxdeg: usize) -> Result<Report> {
    let mut report = Report::new("brace");
    report.merge(check_brace_all(&free_brace(), &tree_leaves(3), maxdeg)?.renamed("free-brace"));
    let gens: Vec<DendTree> = (1..=3).map(DendTree::generator).collect();
    report.merge(check_brace_all(&brace_from_dend(Arc::new(FreeDend::new()), 6), &gens, maxdeg)?.renamed("dendriform"));
    Ok(report)
}

fn rightsided(maxdeg: usize) -> Result<Report> {
    let mut report = Report::new("rightsided");
    let brace = check_rightsided(&ChaProduct::from_mb(free_brace().into_mb(), tree_leaves(3)), maxdeg);
    report.push("free-brace", brace.is_rightsided() && brace.agree(), brace.violations.join("; "));
    let qsym = check_rightsided(&qsym_tensor_product(maxdeg, maxdeg), maxdeg);
    report.push("quasi-shuffle", qsym.is_rightsided() && qsym.agree(), qsym.violations.join("; "));
    let dipt = check_rightsided(&ChaProduct::from_mb(mb_from_dipt(Arc::new(FreeDipt::new()), 6), dipt_generators(2)), maxdeg);
    report.push(
        "free-dipterous-not-rightsided",
        !dipt.is_rightsided() && dipt.agree(),
        format!("ideal={} vanishing={}", dipt.ideal, dipt.vanishing),
    );
    Ok(report)
}

// ---------------------------------------------------------------------------
// dipterous and dendriform

fn triples(max: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for a in 1..=max {
        for b in 1..=max {
            for c in 1..=max {
                if a + b + c <= max {
                    out.push((a, b, c));
                }
            }
        }
    }
    out
}

fn dipterous_laws(maxdeg: usize) -> Report {
    let d = FreeDipt::new();
    let mut report = Report::new("dipt");
    let mut assoc = None;
    let mut succ = None;
    for (a, b, c) in triples(maxdeg) {
        for x in d.basis(a) {
            for y in d.basis(b) {
                for z in d.basis(c) {
                    let (bx, by, bz) = (LinComb::basis(x.clone()), LinComb::basis(y.clone()), LinComb::basis(z.clone()));
                    let xy = product_of(&d, &bx, &by);
                    if assoc.is_none() && product_of(&d, &xy, &bz) != product_of(&d, &bx, &product_of(&d, &by, &bz)) {
                        assoc = Some(format!("{x} | {y} | {z}"));
                    }
                    let left = succ_lin(&d, &xy, &bz).expect("nonempty arguments");
                    let right = succ_lin(&d, &bx, &succ_lin(&d, &by, &bz).expect("nonempty")).expect("nonempty");
                    if succ.is_none() && left != right {
                        succ = Some(format!("{x} | {y} | {z}"));
                    }
                }
            }
        }
    }
    outcome(&mut report, "associative", assoc);
    outcome(&mut report, "(x*y)>z = x>(y>z)", succ);
    report.merge(check_bialgebra("bialgebra", &d, |n| d.basis(n), maxdeg));
    report
}

fn dendriform_laws(maxdeg: usize) -> Report {
    let d = FreeDend::new();
    let mut report = Report::new("dend");
    let mut failures: [Option<String>; 3] = [None, None, None];
    for (a, b, c) in triples(maxdeg) {
        for x in d.basis(a) {
            for y in d.basis(b) {
                for z in d.basis(c) {
                    let (bx, by, bz) = (LinComb::basis(x.clone()), LinComb::basis(y.clone()), LinComb::basis(z.clone()));
                    let sides = dendriform_sides(&d, &bx, &by, &bz).expect("nonempty arguments");
                    for (slot, (l, r)) in failures.iter_mut().zip(sides) {
                        if slot.is_none() && l != r {
                            *slot = Some(format!("{x} | {y} | {z}"));
                        }
                    }
                }
            }
        }
    }
    let [first, middle, last] = failures;
    outcome(&mut report, "(x<y)<z = x<(y*z)", first);
    outcome(&mut report, "(x>y)<z = x>(y<z)", middle);
    outcome(&mut report, "(x*y)>z = x>(y>z)", last);
    report.merge(check_bialgebra("bialgebra", &d, |n| d.basis(n), maxdeg));
    report
}

type Pair<K> = (LinComb<K>, LinComb<K>);

/// The three dendriform relations as (left, right) pairs.
pub fn dendriform_sides<C: Dendriform>(c: &C, x: &LinComb<C::Key>, y: &LinComb<C::Key>, z: &LinComb<C::Key>) -> Result<[Pair<C::Key>; 3]> {
    let yz = product_of(c, y, z);
    let xy = product_of(c, x, y);
    Ok([
        (prec_lin(c, &prec_lin(c, x, y)?, z)?, prec_lin(c, x, &yz)?),
        (prec_lin(c, &succ_lin(c, x, y)?, z)?, succ_lin(c, x, &prec_lin(c, y, z)?)?),
        (succ_lin(c, &xy, z)?, succ_lin(c, x, &succ_lin(c, y, z)?)?),
    ])
}

fn idempotent(maxdeg: usize) -> Report {
    let d = FreeDend::new();
    let mut report = check_idempotent(&d, maxdeg);
    let dims: Vec<u64> = (1..=maxdeg).map(|n| primitive_dimension(&d, &d.basis(n)) as u64).collect();
    let expected: Vec<u64> = (1..=maxdeg).map(|n| catalan(n - 1)).collect();
    report.push("primitive-dims-catalan", dims == expected, format!("{dims:?}"));
    report
}

fn outcome(report: &mut Report, id: &str, failure: Option<String>) {
    match failure {
        None => report.pass(id),
        Some(w) => report.fail(id, w),
    }
}

/// Coassociativity, counitality and Δ(xy) = Δ(x)Δ(y) on basis keys of total
/// degree ≤ maxdeg.
pub fn check_bialgebra<C, B>(name: &str, c: &C, basis: B, maxdeg: usize) -> Report
where
    C: Algebra + Coalgebra,
    C::Key: Display,
    B: Fn(usize) -> Vec<C::Key>,
{
    let mut report = Report::new(name);
    let keys: Vec<Vec<C::Key>> = (0..=maxdeg).map(&basis).collect();
    let mut coassoc = None;
    let mut counit = None;
    let mut multiplicative = None;
    for k in keys.iter().flatten() {
        let d = c.coproduct(k);
        let left: LinComb<(C::Key, C::Key, C::Key)> =
            d.map_linear(|(a, b)| c.coproduct(a).map_keys(|(x, y)| (x.clone(), y.clone(), b.clone())));
        let right = d.map_linear(|(a, b)| c.coproduct(b).map_keys(|(x, y)| (a.clone(), x.clone(), y.clone())));
        if coassoc.is_none() && left != right {
            coassoc = Some(k.to_string());
        }
        let left_counit: LinComb<C::Key> = d.map_linear(|(a, b)| if c.is_unit(a) { LinComb::basis(b.clone()) } else { LinComb::zero() });
        let right_counit: LinComb<C::Key> = d.map_linear(|(a, b)| if c.is_unit(b) { LinComb::basis(a.clone()) } else { LinComb::zero() });
        let k_lin = LinComb::basis(k.clone());
        if counit.is_none() && (left_counit != k_lin || right_counit != k_lin) {
            counit = Some(k.to_string());
        }
    }
    'outer: for i in 0..=maxdeg {
        for j in 0..=maxdeg - i {
            for a in &keys[i] {
                for b in &keys[j] {
                    let joint = c.product(a, b).map_linear(|k| c.coproduct(k));
                    let split = c.coproduct(a).bilinear(&c.coproduct(b), |(a1, a2), (b1, b2)| c.product(a1, b1).tensor(&c.product(a2, b2)));
                    if joint != split {
                        multiplicative = Some(format!("{a} * {b}"));
                        break 'outer;
                    }
                }
            }
        }
    }
    outcome(&mut report, &format!("coassociative-deg-{maxdeg}"), coassoc);
    outcome(&mut report, &format!("counital-deg-{maxdeg}"), counit);
    outcome(&mut report, &format!("multiplicative-deg-{maxdeg}"), multiplicative);
    report
}

fn series_identities(maxdeg: usize) -> Report {
    let mut report = Report::new("series");
    report.note("Dend", join(&dend_dims(maxdeg)));
    report.note("Dipt", join(&dipt_dims(maxdeg)));
    report.note("Brace", join(&brace_dims(maxdeg)));
    report.note("MB", join(&mb_dims(maxdeg)));
    report.merge(check_series(maxdeg).renamed("identity"));
    report.merge(series::check_supercatalan(maxdeg + 1));
    report
}

pub fn join<T: Display>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

// ---------------------------------------------------------------------------
// symmetric multibraces

pub fn free_nilpotent_uea(generators: usize, class: usize) -> Arc<Uea> {
    Arc::new(Uea::new(Arc::new(LieAlgebra::free_nilpotent(generators, class)), 6))
}

/// The SMB structures the relations are checked on, each with letters to
/// feed the explicit instances.
pub enum SmbFixture {
    Comas(&'static str, SmbStructure<SymWord<usize>>, Vec<SymWord<usize>>),
    Polynomial(&'static str, SmbStructure<SymWord<u32>>, Vec<SymWord<u32>>),
    Lie(&'static str, SmbStructure<usize>, Vec<usize>),
    PreLie(&'static str, SmbStructure<RTree<u32>>, Vec<RTree<u32>>),
    FaaDiBruno(&'static str, SmbStructure<usize>, Vec<usize>),
}

pub fn smb_fixtures() -> Result<Vec<SmbFixture>> {
    let uea = free_nilpotent_uea(3, 3);
    let comas = comas_to_smb(Arc::new(SymmetrizedUea(uea.clone())), 6);
    let polynomial = comas_to_smb(Arc::new(PolynomialComAs::<u32>::commutative()), 6);
    let lie = lie_to_smb(free_nilpotent_uea(4, 4));
    let trees: Vec<RTree<u32>> = (1..=4).map(RTree::leaf).collect();
    let go = guin_oudom(Arc::new(FreePreLie::<u32>::new()), &trees)?.to_smb(6);
    let fdb = guin_oudom(Arc::new(FaaDiBruno::new()), &[1, 2, 3, 4])?.to_smb(6);
    Ok(vec![
        SmbFixture::Comas("comas-uea", comas, (0..3).map(SymWord::letter).collect()),
        SmbFixture::Polynomial("comas-polynomial", polynomial, (1..=4).map(SymWord::letter).collect()),
        SmbFixture::Lie("lie-free-nilpotent", lie, vec![0, 1, 2, 3]),
        SmbFixture::PreLie("guin-oudom-free-prelie", go, trees),
        SmbFixture::FaaDiBruno("guin-oudom-faa-di-bruno", fdb, vec![1, 2, 3, 1]),
    ])
}

macro_rules! each_fixture {
    ($fixture:expr, |$name:ident, $m:ident, $letters:ident| $body:expr) => {
        match $fixture {
            SmbFixture::Comas($name, $m, $letters) => $body,
            SmbFixture::Polynomial($name, $m, $letters) => $body,
            SmbFixture::Lie($name, $m, $letters) => $body,
            SmbFixture::PreLie($name, $m, $letters) => $body,
            SmbFixture::FaaDiBruno($name, $m, $letters) => $body,
        }
    };
}

/// The four explicit instances on every fixture.
pub fn sr_displayed_all() -> Result<Report> {
    let mut report = Report::new("sr-displayed");
    for f in smb_fixtures()? {
        each_fixture!(&f, |name, m, letters| report.merge(check_sr_displayed(m, letters).renamed(*name)));
    }
    Ok(report)
}

const SR_FORMS: [(&str, &str); 4] = [
    ("sr111", "M21(u v; w) + M11(M11(u;v); w) = M11(u; M11(v;w)) + M12(u; v w)"),
    (
        "sr112",
        "M22(u v; w x) + M12(M11(u;v); w x) = M13(u; v w x) + M12(u; M11(v;w) x) + M12(u; w M11(v;x)) + M11(u; M12(v; w x))",
    ),
    (
        "sr121",
        "M31(u v w; x) + M21(M11(u;v) w; x) + M21(v M11(u;w); x) + M11(M12(u; v w); x) = M13(u; v w x) + M12(u; v M11(w;x)) + M12(u; M11(v;x) w) + M11(u; M21(v w; x))",
    ),
    (
        "sr211",
        "M31(u v w; x) + M21(u M11(v;w); x) + M21(M11(u;w) v; x) + M11(M21(u v; w); x) = M22(u v; w x) + M21(u v; M11(w;x))",
    ),
];

fn instance<G: Key + Display>(which: &str, m: &SmbStructure<G>, letters: &[G]) -> (LinComb<G>, LinComb<G>) {
    let at = |i: usize| &letters[i % letters.len()];
    match which {
        "sr111" => sr111(m, at(0), at(1), at(2)),
        "sr112" => sr112(m, at(0), at(1), at(2), at(3)),
        "sr121" => sr121(m, at(0), at(1), at(2), at(3)),
        _ => sr211(m, at(0), at(1), at(2), at(3)),
    }
}

/// One displayed relation on every fixture, printing the relation and both
/// sides of each instance.
pub fn sr_instance(which: &str) -> Report {
    let mut report = Report::new(which);
    let form = SR_FORMS.iter().find(|(id, _)| *id == which).map(|(_, f)| *f).unwrap_or("");
    report.note("relation", form);
    let fixtures = match smb_fixtures() {
        Ok(f) => f,
        Err(e) => {
            report.fail("fixtures", e.to_string());
            return report;
        }
    };
    for f in &fixtures {
        each_fixture!(f, |name, m, letters| {
            let (left, right) = instance(which, m, letters);
            let shown: Vec<String> = letters.iter().take(4).map(|g| g.to_string()).collect();
            report.push(*name, left == right, format!("u,v,w,x = {}: both sides {}", shown.join(", "), if left == right { left.to_string() } else { format!("differ: {left} vs {right}") }));
        });
    }
    report
}

fn sr_relations(maxdeg: usize) -> Result<Report> {
    let mut report = sr_displayed_all()?;
    report.suite = "sr".into();
    for f in smb_fixtures()? {
        each_fixture!(&f, |name, m, letters| {
            let alphabet = &letters[..3.min(letters.len())];
            report.merge(check_sr_all(m, alphabet, maxdeg)?.renamed(format!("{name}-all")));
        });
    }
    Ok(report)
}

/// M_11 = ½[x,y], M_12 = ⅙[[x,y],z] − 1/12[x,[y,z]], M_21 = −1/12[[x,y],z] + ⅙[x,[y,z]].
pub fn lie_formulas() -> Report {
    let uea = free_nilpotent_uea(3, 3);
    let lie = uea.lie().clone();
    let m = lie_to_smb(uea);
    let s = |v: &[usize]| SymWord::new(v.to_vec());
    let g = |i: usize| LinComb::basis(i);
    let br = |a: &LinComb<usize>, b: &LinComb<usize>| lie.bracket_lin(a, b);
    let (x, y, z) = (g(0), g(1), g(2));
    let xy_z = br(&br(&x, &y), &z);
    let x_yz = br(&x, &br(&y, &z));
    let cases = [
        ("M11", m.m(&s(&[0]), &s(&[1])), br(&x, &y).scale(&frac(1, 2))),
        ("M12", m.m(&s(&[0]), &s(&[1, 2])), xy_z.scale(&frac(1, 6)) - x_yz.scale(&frac(1, 12))),
        ("M21", m.m(&s(&[0, 1]), &s(&[2])), xy_z.scale(&frac(-1, 12)) + x_yz.scale(&frac(1, 6))),
    ];
    let mut report = Report::new("lie-formulas");
    for (id, got, expected) in cases {
        report.push(id, got == expected, lie.format(&got));
    }
    report
}

fn eulerian() -> Result<Report> {
    let u = free_nilpotent_uea(3, 3);
    let samples = vec![vec![0, 1], vec![0, 1, 2], vec![0, 0, 1], vec![0, 1, 2, 3]];
    check_eulerian(u.as_ref(), &samples, 6)
}

fn symmetric_braces(maxdeg: usize) -> Result<Report> {
    let mut report = Report::new("symmetric-brace");
    let trees: Vec<RTree<u32>> = (1..=5).map(RTree::leaf).collect();
    let go = guin_oudom(Arc::new(FreePreLie::<u32>::new()), &trees)?.to_smb(6);
    report.merge(check_symmetric_brace(&go, &trees, maxdeg).renamed("free-prelie"));
    report.merge(check_fdb_braces(maxdeg)?.renamed("faa-di-bruno"));
    Ok(report)
}

fn grossman_larson_suite(maxdeg: usize) -> Result<Report> {
    let gl = grossman_larson(6);
    let trees: Vec<rooted::RootedTree> = (1..=2).flat_map(rooted::enumerate).collect();
    let mut report = Report::new("gl");
    report.merge(smb::check_associative(&gl, &trees, maxdeg)?);
    report.merge(smb::check_hopf(&gl, &trees, maxdeg)?);
    Ok(report)
}

/// Δ(ladder_2) and Δ(corolla_2) against their expansions, and the bialgebra laws.
pub fn connes_kreimer(maxdeg: usize) -> Report {
    let f = |s: &str| parse_forest(s).expect("forest literal");
    let pairs = |items: &[(&str, &str, i64)]| -> LinComb<(Forest, Forest)> {
        items.iter().map(|(a, b, c)| ((f(a), f(b)), cha_core::scalar::int(*c))).collect()
    };
    let mut report = Report::new("ck");
    let ladder = tree_coproduct(&rooted::RootedTree::ladder(2));
    let expected = pairs(&[("{[[]]}", "1", 1), ("1", "{[[]]}", 1), ("{[]}", "{[]}", 1)]);
    report.push("ladder2", ladder == expected, format_forest_pairs(&ladder));
    let corolla = tree_coproduct(&rooted::RootedTree::corolla(2));
    let expected = pairs(&[("{[[] []]}", "1", 1), ("1", "{[[] []]}", 1), ("{[]}", "{[[]]}", 2), ("{[], []}", "{[]}", 1)]);
    report.push("corolla2", corolla == expected, format_forest_pairs(&corolla));
    let ck = ConnesKreimer::new(maxdeg.max(1));
    report.merge(check_bialgebra("bialgebra", &ck, forests, maxdeg));
    report
}

pub fn format_forest_pairs(x: &LinComb<(Forest, Forest)>) -> String {
    x.format_with(|(a, b)| format!("{} (x) {}", format_forest(a), format_forest(b)))
}

// ---------------------------------------------------------------------------
// brace operad

pub const OPERAD_EXAMPLE: (&str, &str) = ("[[]] x 12", "[[] []] x 123 + [[[]]] x 123 + [[] []] x 132");

fn operad(max_total: usize) -> Report {
    let mut report = Report::new("operad");
    let ladder = parse_element(OPERAD_EXAMPLE.0).expect("literal");
    let expected = parse_element(OPERAD_EXAMPLE.1).expect("literal");
    match brace_compose(&ladder, 1, &ladder) {
        Ok(got) => report.push("ladder-o1-ladder", got == expected, cha_multibrace::operad::format_element(&got)),
        Err(e) => report.fail("ladder-o1-ladder", e.to_string()),
    }
    report.merge(check_operad_axioms(max_total));
    report
}

// ---------------------------------------------------------------------------
// examples

fn malvenuto_reutenauer(maxdeg: usize) -> Result<Report> {
    let mut report = Report::new("mr");
    report.merge(check_bialgebra("bialgebra", &MalvenutoReutenauer, perm::enumerate, maxdeg));
    report.merge(mr_extract_structures(maxdeg)?);
    Ok(report)
}

fn faa_di_bruno(maxdeg: usize) -> Result<Report> {
    let mut report = Report::new("fdb");
    report.merge(check_fdb_prelie(9));
    let d2 = fdb_coproduct(2)?;
    report.push("Delta(a2)", cha_zoo::fdb::format_pairs(&d2) == "a1^2 (x) a2 + a2 (x) a1", cha_zoo::fdb::format_pairs(&d2));
    report.merge(check_fdb_coproduct(maxdeg + 1)?);
    report.merge(check_fdb_braces(maxdeg)?);
    report.merge(fdb_cross_check(maxdeg.min(3))?);
    report.merge(fdb_cross_check_shifted(maxdeg.min(4))?.renamed("fdb-cross-check-shifted"));
    Ok(report)
}

fn quasi_symmetric(maxdeg: usize) -> Report {
    let mut report = Report::new("qsym");
    report.merge(check_bialgebra("bialgebra", &Qsym, compositions, maxdeg));
    report.merge(qsym_mb_check(maxdeg));
    report
}

// ---------------------------------------------------------------------------
// dimension tables

pub struct Row {
    pub name: &'static str,
    pub computed: Vec<String>,
    pub expected: Vec<String>,
}

impl Row {
    fn new<A: Display, B: Display>(name: &'static str, computed: &[A], expected: &[B]) -> Self {
        Row {
            name,
            computed: computed.iter().map(|x| x.to_string()).collect(),
            expected: expected.iter().map(|x| x.to_string()).collect(),
        }
    }

    pub fn matches(&self) -> bool {
        self.computed == self.expected
    }
}

pub const TABLES: &[&str] = &["dimensions", "catalan", "supercatalan", "series-parallel"];

/// Rows computed from the constructions next to the published values, and
/// an optional note on indexing.
pub fn table(name: &str) -> Result<(Vec<Row>, Option<&'static str>)> {
    let counts = |f: &dyn Fn(usize) -> usize, range: std::ops::RangeInclusive<usize>| -> Vec<usize> { range.map(f).collect() };
    match name {
        "dimensions" => Ok((
            vec![
                Row::new("Dend", &dend_dims(5), &[1, 2, 5, 14, 42]),
                Row::new("Dipt", &dipt_dims(5), &[1, 2, 6, 22, 90]),
                Row::new("|PT_n|", &counts(&|n| planar::enumerate(n).len(), 1..=5), &[1, 1, 3, 11, 45]),
                Row::new("labeled rooted trees", &(1..=5).map(rooted::count_labeled).collect::<Vec<_>>(), &[1, 2, 9, 64, 625]),
            ],
            None,
        )),
        "catalan" => Ok((vec![Row::new("Dend", &dend_dims(5), &[1, 2, 5, 14, 42])], None)),
        "supercatalan" => Ok((
            vec![Row::new("|PT_(n+1)|", &counts(&|n| planar::enumerate(n + 1).len(), 1..=5), &[1, 3, 11, 45, 197])],
            Some("entry n counts planar trees with n+1 leaves; the row 1,1,3,11,45 indexed by leaves starts one step earlier"),
        )),
        "series-parallel" => Ok((
            vec![
                Row::new("d_n", &(1..=5).map(|n| series_parallel::count(n, false)).collect::<Vec<_>>(), &[1, 3, 19, 195, 2791]),
                Row::new("f_n", &(1..=5).map(|n| series_parallel::count(n, true)).collect::<Vec<_>>(), &[1, 2, 12, 122, 1740]),
            ],
            None,
        )),
        other => Err(cha_core::Error::invalid(format!("unknown table `{other}`; known: {}", TABLES.join(", ")))),
    }
}

trait Renamed {
    fn renamed(self, name: impl Into<String>) -> Self;
}

impl Renamed for Report {
    fn renamed(mut self, name: impl Into<String>) -> Self {
        self.suite = name.into();
        self
    }
}
