//! Sums over pairings of the legs of a diagram.

use diagram_core::{linking, BlanchfieldSpec, Diagram};
use exact_algebra::LaurentPoly;

/// One pairing of the legs of a diagram: every leg is joined to its partner
/// by an edge carrying the linking of their labels, as a numerator over
/// `delta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiTerm {
    pub pairing: Vec<(usize, usize)>,
    pub edge_labels: Vec<LaurentPoly>,
}

/// All fixed-point-free involutions of `0..n`, as sorted pair lists.
pub fn perfect_matchings(n: usize) -> Vec<Vec<(usize, usize)>> {
    fn go(rest: &[usize], acc: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        let Some((&first, tail)) = rest.split_first() else {
            out.push(acc.clone());
            return;
        };
        for (i, &partner) in tail.iter().enumerate() {
            let remaining: Vec<usize> = tail.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x).collect();
            acc.push((first, partner));
            go(&remaining, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if n.is_multiple_of(2) {
        go(&(0..n).collect::<Vec<_>>(), &mut Vec::new(), &mut out);
    }
    out
}

/// The pairing expansion of a diagram: one fully contracted term per pairing
/// of its legs, none when the number of legs is odd.
pub fn psi2_expand(d: &Diagram, spec: &BlanchfieldSpec) -> Vec<PsiTerm> {
    let legs = d.legs();
    perfect_matchings(legs.len())
        .into_iter()
        .map(|pairing| {
            let edge_labels = pairing.iter().map(|&(v, w)| linking(legs[v], legs[w], spec)).collect();
            PsiTerm { pairing, edge_labels }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matchings_are_involutions() {
        for m in perfect_matchings(6) {
            let mut seen: Vec<usize> = m.iter().flat_map(|&(a, b)| [a, b]).collect();
            seen.sort();
            assert_eq!(seen, (0..6).collect::<Vec<_>>());
        }
        assert!(perfect_matchings(3).is_empty());
        assert_eq!(perfect_matchings(0).len(), 1);
    }
}
