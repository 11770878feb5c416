//! Graded nilpotent Lie algebras given by structure constants.

use std::collections::BTreeMap;

use cha_core::linalg::Echelon;
use cha_core::scalar;
use cha_core::{Error, LinComb, Report, Result, Word};
use serde::{Deserialize, Serialize};

/// Basis elements carry positive weights and brackets add weights, so the
/// algebra is nilpotent.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra {
    names: Vec<String>,
    weights: Vec<usize>,
    table: Vec<Vec<LinComb<usize>>>,
}

#[derive(Serialize, Deserialize)]
struct BracketEntry {
    left: String,
    right: String,
    value: BTreeMap<String, serde_json::Value>,
}

#[derive(Serialize, Deserialize)]
struct LieFile {
    basis: Vec<String>,
    grading: Vec<usize>,
    brackets: Vec<BracketEntry>,
}

impl LieAlgebra {
    /// Builds and validates; `table[i][j]` is [e_i, e_j].
    pub fn new(names: Vec<String>, weights: Vec<usize>, table: Vec<Vec<LinComb<usize>>>) -> Result<Self> {
        let n = names.len();
        if weights.len() != n || table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::invalid("basis, grading and bracket table sizes differ"));
        }
        if weights.contains(&0) {
            return Err(Error::invalid("weights must be positive"));
        }
        let lie = LieAlgebra { names, weights, table };
        let report = lie.validate();
        if let Some(bad) = report.failures().next() {
            return Err(Error::invalid(format!("{}: {}", bad.id, bad.detail)));
        }
        Ok(lie)
    }

    /// Antisymmetry, Jacobi and additivity of weights on basis elements.
    pub fn validate(&self) -> Report {
        let mut report = Report::new("lie");
        let n = self.dim();
        let fail = |report: &mut Report, id: &str, detail: String| {
            if report.checks.iter().all(|c| c.id != id) {
                report.fail(id, detail);
            }
        };
        for i in 0..n {
            for j in 0..n {
                if self.table[i][j] != -&self.table[j][i] {
                    fail(&mut report, "antisymmetry", format!("[{},{}]", self.names[i], self.names[j]));
                }
                if self.table[i][j].keys().any(|&k| k >= n || self.weights[k] != self.weights[i] + self.weights[j]) {
                    fail(&mut report, "grading", format!("[{},{}]", self.names[i], self.names[j]));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let b = |x: usize, y: &LinComb<usize>| self.bracket_lin(&LinComb::basis(x), y);
                    let jac = b(i, &self.table[j][k]) + b(j, &self.table[k][i]) + b(k, &self.table[i][j]);
                    if !jac.is_zero() {
                        fail(&mut report, "jacobi", format!("{} {} {}", self.names[i], self.names[j], self.names[k]));
                    }
                }
            }
        }
        for id in ["antisymmetry", "grading", "jacobi"] {
            if report.checks.iter().all(|c| c.id != id) {
                report.pass(id);
            }
        }
        report
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weight(&self, i: usize) -> usize {
        self.weights[i]
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn bracket(&self, i: usize, j: usize) -> &LinComb<usize> {
        &self.table[i][j]
    }

    pub fn bracket_lin(&self, x: &LinComb<usize>, y: &LinComb<usize>) -> LinComb<usize> {
        x.bilinear(y, |&i, &j| self.table[i][j].clone())
    }

    pub fn format(&self, x: &LinComb<usize>) -> String {
        x.format_with(|&i| self.names[i].clone())
    }

    /// The abelian Lie algebra on the given names, all of weight one.
    pub fn abelian(names: &[&str]) -> Self {
        let n = names.len();
        LieAlgebra {
            names: names.iter().map(|s| s.to_string()).collect(),
            weights: vec![1; n],
            table: vec![vec![LinComb::zero(); n]; n],
        }
    }

    /// The free Lie algebra on `generators` letters modulo brackets of
    /// weight above `class`. The basis is read off from the brackets
    /// [x_i, b] inside the tensor algebra by row reduction.
    pub fn free_nilpotent(generators: usize, class: usize) -> Self {
        const LETTERS: [&str; 6] = ["x", "y", "z", "t", "u", "v"];
        assert!(generators <= LETTERS.len(), "at most six generators");
        let mut names: Vec<String> = LETTERS[..generators].iter().map(|s| s.to_string()).collect();
        let mut weights = vec![1; generators];
        let mut polys: Vec<LinComb<Word<usize>>> = (0..generators).map(|g| LinComb::basis(Word::letter(g))).collect();
        let mut layers: Vec<(Echelon<Word<usize>>, Vec<usize>)> = Vec::new();
        let mut first = Echelon::new();
        for p in &polys {
            first.insert(p);
        }
        layers.push((first, (0..generators).collect()));
        for weight in 2..=class {
            let mut ech = Echelon::new();
            let mut members = Vec::new();
            let previous = layers[weight - 2].1.clone();
            for g in 0..generators {
                for &b in &previous {
                    let p = commutator(&polys[g], &polys[b]);
                    if p.is_zero() || ech.contains(&p) {
                        continue;
                    }
                    ech.insert(&p);
                    members.push(polys.len());
                    names.push(format!("[{},{}]", names[g], names[b]));
                    weights.push(weight);
                    polys.push(p);
                }
            }
            layers.push((ech, members));
        }
        let n = polys.len();
        let mut table = vec![vec![LinComb::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let w = weights[i] + weights[j];
                if w > class {
                    continue;
                }
                let (ech, members) = &layers[w - 1];
                let coords = ech.solve(&commutator(&polys[i], &polys[j])).expect("brackets close on the basis");
                table[i][j] = coords.map_keys(|&r| members[r]);
            }
        }
        LieAlgebra { names, weights, table }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: LieFile = serde_json::from_str(text).map_err(|e| Error::invalid(format!("Lie algebra file: {e}")))?;
        let n = file.basis.len();
        let mut lie = LieAlgebra { names: file.basis, weights: file.grading, table: Vec::new() };
        let mut table = vec![vec![LinComb::zero(); n]; n];
        let lookup = |lie: &LieAlgebra, s: &str| lie.index(s).ok_or_else(|| Error::invalid(format!("unknown basis element `{s}`")));
        let mut given = vec![vec![false; n]; n];
        for entry in &file.brackets {
            let (i, j) = (lookup(&lie, &entry.left)?, lookup(&lie, &entry.right)?);
            let mut value = LinComb::zero();
            for (k, c) in &entry.value {
                let c = match c {
                    serde_json::Value::Number(x) => scalar::parse(&x.to_string())?,
                    serde_json::Value::String(s) => scalar::parse(s)?,
                    _ => return Err(Error::invalid("coefficients are numbers or strings")),
                };
                value.add_term(lookup(&lie, k)?, c);
            }
            given[i][j] = true;
            if !given[j][i] {
                table[j][i] = -&value;
            }
            table[i][j] = value;
        }
        lie.table = table;
        let (names, weights, table) = (lie.names, lie.weights, lie.table);
        LieAlgebra::new(names, weights, table)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut brackets = Vec::new();
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                if self.table[i][j].is_zero() {
                    continue;
                }
                let value = self.table[i][j]
                    .iter()
                    .map(|(&k, c)| (self.names[k].clone(), serde_json::Value::String(scalar::format(c))))
                    .collect();
                brackets.push(BracketEntry { left: self.names[i].clone(), right: self.names[j].clone(), value });
            }
        }
        serde_json::to_value(LieFile { basis: self.names.clone(), grading: self.weights.clone(), brackets })
            .expect("serializable")
    }
}

fn commutator(a: &LinComb<Word<usize>>, b: &LinComb<Word<usize>>) -> LinComb<Word<usize>> {
    let ab = a.bilinear(b, |x, y| LinComb::basis(x.concat(y)));
    let ba = b.bilinear(a, |x, y| LinComb::basis(x.concat(y)));
    ab - ba
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_nilpotent_dimensions() {
        let dims = |g, c| {
            let l = LieAlgebra::free_nilpotent(g, c);
            (1..=c).map(|w| (0..l.dim()).filter(|&i| l.weight(i) == w).count()).collect::<Vec<_>>()
        };
        assert_eq!(dims(2, 4), vec![2, 1, 2, 3]);
        assert_eq!(dims(3, 3), vec![3, 3, 8]);
        assert!(LieAlgebra::free_nilpotent(3, 3).validate().ok());
    }

    #[test]
    fn json_round_trip() {
        let l = LieAlgebra::free_nilpotent(2, 3);
        let text = l.to_json().to_string();
        assert_eq!(LieAlgebra::from_json(&text).unwrap(), l);
        let bad = r#"{"basis":["a","b","c"],"grading":[1,1,1],"brackets":[{"left":"a","right":"b","value":{"c":1}}]}"#;
        assert!(LieAlgebra::from_json(bad).is_err());
    }
}
