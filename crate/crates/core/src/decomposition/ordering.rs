use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};

/// Exhaustive enumeration is refused above this many predictors (8! = 40,320).
pub const MAX_EXHAUSTIVE_PREDICTORS: usize = 8;

/// An order in which predictors enter a sequential (Type I) decomposition.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Ordering(Vec<String>);

impl Ordering {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::InvalidOrdering("ordering is empty".into()));
        }
        let mut seen = HashSet::new();
        for n in names {
            if !seen.insert(n.as_ref()) {
                return Err(Error::InvalidOrdering(format!(
                    "`{}` appears more than once",
                    n.as_ref()
                )));
            }
        }
        Ok(Self(names.iter().map(|s| s.as_ref().to_string()).collect()))
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Comma-joined names, e.g. `X1,X2`.
    pub fn label(&self) -> String {
        self.0.join(",")
    }

    /// True when this ordering contains exactly the names in `model`.
    pub fn is_permutation_of<S: AsRef<str>>(&self, model: &[S]) -> bool {
        if model.len() != self.0.len() {
            return false;
        }
        let mine: HashSet<&str> = self.0.iter().map(String::as_str).collect();
        model.iter().all(|m| mine.contains(m.as_ref()))
    }
}

/// Every ordering of `model`, sorted lexicographically by predictor names.
pub fn all_orderings<S: AsRef<str>>(model: &[S]) -> Result<Vec<Ordering>> {
    if model.len() > MAX_EXHAUSTIVE_PREDICTORS {
        return Err(Error::TooManyOrderings {
            p: model.len(),
            cap: MAX_EXHAUSTIVE_PREDICTORS,
        });
    }
    let mut names: Vec<String> = model.iter().map(|s| s.as_ref().to_string()).collect();
    Ordering::new(&names)?;
    names.sort();
    let mut out = Vec::new();
    permute(&mut names, 0, &mut out);
    out.sort();
    Ok(out)
}

fn permute(names: &mut Vec<String>, k: usize, out: &mut Vec<Ordering>) {
    if k == names.len() {
        out.push(Ordering(names.clone()));
        return;
    }
    for i in k..names.len() {
        names.swap(k, i);
        permute(names, k + 1, out);
        names.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerates_sorted_permutations() {
        let all = all_orderings(&["b", "a", "c"]).unwrap();
        let labels: Vec<String> = all.iter().map(Ordering::label).collect();
        assert_eq!(labels, ["a,b,c", "a,c,b", "b,a,c", "b,c,a", "c,a,b", "c,b,a"]);
    }

    #[test]
    fn cap_is_enforced() {
        let nine: Vec<String> = (1..=9).map(|i| format!("X{i}")).collect();
        assert_eq!(
            all_orderings(&nine).unwrap_err(),
            Error::TooManyOrderings { p: 9, cap: 8 }
        );
        assert_eq!(all_orderings(&nine[..8]).unwrap().len(), 40_320);
    }

    #[test]
    fn validation() {
        assert!(Ordering::new(&["a", "a"]).is_err());
        assert!(Ordering::new::<&str>(&[]).is_err());
        let o = Ordering::new(&["b", "a"]).unwrap();
        assert!(o.is_permutation_of(&["a", "b"]));
        assert!(!o.is_permutation_of(&["a", "c"]));
        assert!(!o.is_permutation_of(&["a"]));
    }
}
