//! `eval ALGEBRA "VERB ARG ..."`: products, coproducts and idempotents in
//! the example algebras.
//!
//! Arguments are separated by spaces outside brackets; an argument that
//! itself contains top-level spaces (a linear combination, a dipterous
//! monomial with several trees, a brace-operad element) is wrapped in
//! `<` `>`.

use cha_combinatorics::rooted::RootedTree;
use cha_combinatorics::Permutation;
use cha_core::hopf::{conv_log, coproduct_of, product_of};
use cha_core::text::parse_lincomb;
use cha_core::words::unshuffle;
use cha_core::{Algebra, Coalgebra, Error, Graded, LinComb, Result};
use cha_dipt_dend::context::{prec_lin, succ_lin};
use cha_dipt_dend::idempotent::e_dend;
use cha_dipt_dend::{DendTree, DiptMono, FreeDend, FreeDipt};
use cha_multibrace::operad::{brace_compose, format_element, parse_element};
use cha_symmetric::ck::{format_forest, forest_vertices, parse_forest, ConnesKreimer, Forest};
use cha_symmetric::{grossman_larson, smb_to_product, SmbStructure};
use cha_zoo::fdb::{fdb_coproduct_monomial, fdb_prelie, format_monomial, format_pairs, parse_monomial, FdbMonomial};
use cha_zoo::mr::{mr_e, mr_phi, mr_theta, MalvenutoReutenauer};
use cha_zoo::qsym::{ctd_dot, ctd_prec, Qsym, QsymKey};
use serde_json::{json, Value};

pub const ALGEBRAS: &[&str] = &["dipt", "dend", "mr", "qsym", "fdb", "gl", "ck", "brace-operad"];

/// The printed result and its structured form.
#[derive(Debug, Clone, PartialEq)]
pub struct Evaluated {
    pub text: String,
    pub json: Value,
}

impl Evaluated {
    fn of<K: Ord + Clone>(x: &LinComb<K>, key: impl Fn(&K) -> String) -> Self {
        Evaluated { text: x.format_with(&key), json: x.to_json_with(|k| Value::String(key(k))) }
    }
}

/// A token of the expression and its byte offset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Token<'a> {
    pub offset: usize,
    pub text: &'a str,
}

/// Splits at spaces outside `()[]{}<>`; the outer `<…>` of a token is dropped.
pub fn tokens(expr: &str) -> Result<Vec<Token<'_>>> {
    let bytes = expr.as_bytes();
    let mut out = Vec::new();
    let mut depth: Vec<(u8, usize)> = Vec::new();
    let mut start = None;
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' | b'[' | b'{' | b'<' => depth.push((b, i)),
            b')' | b']' | b'}' | b'>' => {
                let open = match b {
                    b')' => b'(',
                    b']' => b'[',
                    b'}' => b'{',
                    _ => b'<',
                };
                match depth.pop() {
                    Some((o, _)) if o == open => {}
                    _ => return Err(Error::parse(i, format!("unbalanced `{}`", b as char))),
                }
            }
            _ => {}
        }
        if b == b' ' && depth.is_empty() {
            if let Some(s) = start.take() {
                out.push(Token { offset: s, text: &expr[s..i] });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some((b, i)) = depth.pop() {
        return Err(Error::parse(i, format!("unclosed `{}`", b as char)));
    }
    if let Some(s) = start {
        out.push(Token { offset: s, text: &expr[s..] });
    }
    Ok(out
        .into_iter()
        .map(|t| match t.text.strip_prefix('<').and_then(|r| r.strip_suffix('>')) {
            Some(inner) => Token { offset: t.offset + 1, text: inner },
            None => t,
        })
        .collect())
}

fn shift(e: Error, offset: usize) -> Error {
    match e {
        Error::Parse { pos, msg } => Error::parse(pos + offset, msg),
        other => other,
    }
}

fn element<K: Ord + Clone>(t: &Token, key: impl FnMut(&str) -> Result<K>) -> Result<LinComb<K>> {
    parse_lincomb(t.text, key).map_err(|e| shift(e, t.offset))
}

fn arity(verb: &Token, args: &[Token], n: usize) -> Result<()> {
    if args.len() == n {
        Ok(())
    } else {
        Err(Error::parse(verb.offset, format!("`{}` takes {n} argument(s), got {}", verb.text, args.len())))
    }
}

fn unknown_verb(verb: &Token, algebra: &str, known: &[&str]) -> Error {
    Error::parse(verb.offset, format!("`{}` is not defined for {algebra}; verbs: {}", verb.text, known.join(", ")))
}

/// Fails when the arguments together exceed the truncation bound.
fn within<K: Ord + Clone>(degree: impl Fn(&K) -> usize, args: &[&LinComb<K>], bound: usize) -> Result<()> {
    let total: usize = args.iter().map(|x| x.keys().map(&degree).max().unwrap_or(0)).sum();
    cha_core::error::check_bound(total, bound)
}

pub fn eval(algebra: &str, expression: &str, bound: usize) -> Result<Evaluated> {
    let toks = tokens(expression)?;
    let Some((verb, args)) = toks.split_first() else {
        return Err(Error::parse(0, "empty expression"));
    };
    match algebra {
        "dipt" => dipt(verb, args, bound),
        "dend" => dend(verb, args, bound),
        "mr" => mr(verb, args, bound),
        "qsym" => qsym(verb, args, bound),
        "fdb" => fdb(verb, args, bound),
        "gl" => gl(verb, args, bound),
        "ck" => ck(verb, args, bound),
        "brace-operad" => brace_operad(verb, args),
        other => Err(Error::invalid(format!("unknown algebra `{other}`; known: {}", ALGEBRAS.join(", ")))),
    }
}

fn pairs<K: Ord + Clone + std::fmt::Display>(x: &LinComb<(K, K)>) -> Evaluated {
    Evaluated::of(x, |(a, b)| format!("{a} (x) {b}"))
}

fn plain<K: Ord + Clone + std::fmt::Display>(x: &LinComb<K>) -> Evaluated {
    Evaluated::of(x, |k| k.to_string())
}

/// Verbs common to an algebra with a Hopf structure on keys that print and
/// parse through `Display` and `parse`.
fn hopf_verbs<C>(c: &C, verb: &Token, args: &[Token], bound: usize, parse: fn(&str) -> Result<C::Key>) -> Option<Result<Evaluated>>
where
    C: Algebra + Coalgebra,
    C::Key: std::fmt::Display,
{
    let run = || -> Result<Evaluated> {
        match verb.text {
            "product" => {
                arity(verb, args, 2)?;
                let (x, y) = (element(&args[0], parse)?, element(&args[1], parse)?);
                within(|k| c.degree(k), &[&x, &y], bound)?;
                Ok(plain(&product_of(c, &x, &y)))
            }
            "coproduct" => {
                arity(verb, args, 1)?;
                let x = element(&args[0], parse)?;
                within(|k| c.degree(k), &[&x], bound)?;
                Ok(pairs(&coproduct_of(c, &x)))
            }
            "e1" => {
                arity(verb, args, 1)?;
                let x = element(&args[0], parse)?;
                Ok(plain(&conv_log(c, &x, bound)?))
            }
            _ => unreachable!(),
        }
    };
    matches!(verb.text, "product" | "coproduct" | "e1").then(run)
}

fn dipt(verb: &Token, args: &[Token], bound: usize) -> Result<Evaluated> {
    let d = FreeDipt::new();
    if let Some(r) = hopf_verbs(&d, verb, args, bound, DiptMono::parse) {
        return r;
    }
    match verb.text {
        "succ" => {
            arity(verb, args, 2)?;
            let (x, y) = (element(&args[0], DiptMono::parse)?, element(&args[1], DiptMono::parse)?);
            within(|k| d.degree(k), &[&x, &y], bound)?;
            Ok(plain(&succ_lin(&d, &x, &y)?))
        }
        _ => Err(unknown_verb(verb, "dipt", &["product", "succ", "coproduct", "e1"])),
    }
}

fn dend(verb: &Token, args: &[Token], bound: usize) -> Result<Evaluated> {
    let d = FreeDend::new();
    if let Some(r) = hopf_verbs(&d, verb, args, bound, DendTree::parse) {
        return r;
    }
    match verb.text {
        "succ" | "prec" => {
            arity(verb, args, 2)?;
            let (x, y) = (element(&args[0], DendTree::parse)?, element(&args[1], DendTree::parse)?);
            within(|k| d.degree(k), &[&x, &y], bound)?;
            let r = if verb.text == "succ" { succ_lin(&d, &x, &y)? } else { prec_lin(&d, &x, &y)? };
            Ok(plain(&r))
        }
        "e" => {
            arity(verb, args, 1)?;
            let x = element(&args[0], DendTree::parse)?;
            Ok(plain(&e_dend(&d, &x, bound)?))
        }
        _ => Err(unknown_verb(verb, "dend", &["product", "succ", "prec", "coproduct", "e", "e1"])),
    }
}

/// `σ1|σ2|…` of irreducible permutations.
fn parse_word(t: &Token) -> Result<Vec<Permutation>> {
    let mut out = Vec::new();
    let mut at = 0;
    for part in t.text.split('|') {
        out.push(Permutation::parse(part).map_err(|e| shift(e, t.offset + at))?);
        at += part.len() + 1;
    }
    Ok(out)
}

fn mr(verb: &Token, args: &[Token], bound: usize) -> Result<Evaluated> {
    let c = MalvenutoReutenauer;
    if let Some(r) = hopf_verbs(&c, verb, args, bound, Permutation::parse) {
        return r;
    }
    match verb.text {
        "succ" | "prec" => {
            arity(verb, args, 2)?;
            let (x, y) = (element(&args[0], Permutation::parse)?, element(&args[1], Permutation::parse)?);
            within(Permutation::len, &[&x, &y], bound)?;
            let r = if verb.text == "succ" { succ_lin(&c, &x, &y)? } else { prec_lin(&c, &x, &y)? };
            Ok(plain(&r))
        }
        "e" => {
            arity(verb, args, 1)?;
            Ok(plain(&mr_e(&element(&args[0], Permutation::parse)?, bound)?))
        }
        "phi" | "theta" => {
            arity(verb, args, 1)?;
            let word = parse_word(&args[0])?;
            let r = if verb.text == "phi" { mr_phi(&word, bound)? } else { mr_theta(&word, bound)? };
            Ok(plain(&r))
        }
        _ => Err(unknown_verb(verb, "mr", &["product", "succ", "prec", "coproduct", "e", "e1", "phi", "theta"])),
    }
}

fn qsym(verb: &Token, args: &[Token], bound: usize) -> Result<Evaluated> {
    if let Some(r) = hopf_verbs(&Qsym, verb, args, bound, QsymKey::parse) {
        return r;
    }
    match verb.text {
        "prec" | "dot" => {
            arity(verb, args, 2)?;
            let (x, y) = (element(&args[0], QsymKey::parse)?, element(&args[1], QsymKey::parse)?);
            within(QsymKey::degree, &[&x, &y], bound)?;
            let r = if verb.text == "prec" { ctd_prec(&x, &y)? } else { ctd_dot(&x, &y)? };
            Ok(plain(&r))
        }
        _ => Err(unknown_verb(verb, "qsym", &["product", "prec", "dot", "coproduct", "e1"])),
    }
}

fn weight(m: &FdbMonomial) -> usize {
    m.letters().iter().sum()
}

fn generator(s: &str) -> Result<usize> {
    let digits = s.strip_prefix('x').ok_or_else(|| Error::parse(0, "expected a generator `xN`"))?;
    match digits.parse::<usize>() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(Error::parse(1, "expected a positive index")),
    }
}

fn fdb(verb: &Token, args: &[Token], bound: usize) -> Result<Evaluated> {
    let monomial = |m: &FdbMonomial| format_monomial(m);
    match verb.text {
        "product" => {
            arity(verb, args, 2)?;
            let (x, y) = (element(&args[0], parse_monomial)?, element(&args[1], parse_monomial)?);
            within(weight, &[&x, &y], bound)?;
            Ok(Evaluated::of(&x.bilinear(&y, |a, b| LinComb::basis(a.union(b))), monomial))
        }
        "coproduct" => {
            arity(verb, args, 1)?;
            let x = element(&args[0], parse_monomial)?;
            within(weight, &[&x], bound)?;
            let d = x.try_map_linear(fdb_coproduct_monomial)?;
            Ok(Evaluated { text: format_pairs(&d), json: d.to_json_with(|(a, b)| json!(format!("{} (x) {}", monomial(a), monomial(b)))) })
        }
        "prelie" => {
            arity(verb, args, 2)?;
            let (x, y) = (element(&args[0], generator)?, element(&args[1], generator)?);
            let r = x.try_bilinear(&y, |&p, &q| fdb_prelie(p, q))?;
            Ok(Evaluated::of(&r, |n| format!("x{n}")))
        }
        _ => Err(unknown_verb(verb, "fdb", &["product", "coproduct", "prelie"])),
    }
}

/// A forest literal `{…}`, `1`, or a single tree `[…]`.
fn forest(s: &str) -> Result<Forest> {
    if s.starts_with('[') {
        Ok(Forest::letter(RootedTree::parse(s)?))
    } else {
        parse_forest(s)
    }
}

/// The Grossman–Larson algebra with the unshuffle coproduct.
struct GrossmanLarson(SmbStructure<RootedTree>);

impl Graded for GrossmanLarson {
    type Key = Forest;
    fn unit(&self) -> Forest {
        Forest::empty()
    }
    fn degree(&self, f: &Forest) -> usize {
        forest_vertices(f)
    }
}

impl Algebra for GrossmanLarson {
    fn product(&self, a: &Forest, b: &Forest) -> LinComb<Forest> {
        smb_to_product(&self.0, a, b).expect("degrees are checked against the bound first")
    }
}

impl Coalgebra for GrossmanLarson {
    fn coproduct(&self, f: &Forest) -> LinComb<(Forest, Forest)> {
        unshuffle(f)
    }
}

fn forest_verbs<C: Algebra<Key = Forest> + Coalgebra>(c: &C, name: &str, verb: &Token, args: &[Token], bound: usize) -> Result<Evaluated> {
    let x = |i: usize| element(&args[i], forest);
    match verb.text {
        "product" => {
            arity(verb, args, 2)?;
            let (a, b) = (x(0)?, x(1)?);
            within(forest_vertices, &[&a, &b], bound)?;
            Ok(Evaluated::of(&product_of(c, &a, &b), format_forest))
        }
        "coproduct" => {
            arity(verb, args, 1)?;
            let a = x(0)?;
            within(forest_vertices, &[&a], bound)?;
            Ok(Evaluated::of(&coproduct_of(c, &a), |(p, q)| format!("{} (x) {}", format_forest(p), format_forest(q))))
        }
        "e1" => {
            arity(verb, args, 1)?;
            let a = x(0)?;
            within(forest_vertices, &[&a], bound)?;
            Ok(Evaluated::of(&conv_log(c, &a, bound)?, format_forest))
        }
        _ => Err(unknown_verb(verb, name, &["product", "coproduct", "e1"])),
    }
}

fn gl(verb: &Token, args: &[Token], bound: usize) -> Result<Evaluated> {
    forest_verbs(&GrossmanLarson(grossman_larson(bound.max(1))), "gl", verb, args, bound)
}

fn ck(verb: &Token, args: &[Token], bound: usize) -> Result<Evaluated> {
    forest_verbs(&ConnesKreimer::new(bound.max(1)), "ck", verb, args, bound)
}

fn brace_operad(verb: &Token, args: &[Token]) -> Result<Evaluated> {
    match verb.text {
        "compose" => {
            arity(verb, args, 3)?;
            let mu = parse_element(args[0].text).map_err(|e| shift(e, args[0].offset))?;
            let i: usize = args[1].text.parse().map_err(|_| Error::parse(args[1].offset, "expected a composition index"))?;
            let nu = parse_element(args[2].text).map_err(|e| shift(e, args[2].offset))?;
            let r = brace_compose(&mu, i, &nu)?;
            Ok(Evaluated { text: format_element(&r), json: r.to_json_with(|(t, s)| json!(format!("{t} x {s}"))) })
        }
        _ => Err(unknown_verb(verb, "brace-operad", &["compose"])),
    }
}
