//! Finite groups as explicit multiplication tables, with the subgroup
//! criterion, cosets and homomorphism checks.

use std::collections::BTreeSet;

use serde::Deserialize;

use super::perm::Permutation;
use super::GroupError;
use crate::quotient::Partition;

/// A raw multiplication table over labeled elements. `table[i][j]` is the
/// index of `elements[i] ∘ elements[j]`.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct CayleyTable {
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

/// Verdict of the exhaustive group-axiom check on a table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupCheck {
    pub is_group: bool,
    /// Whether the commutativity axiom holds in addition.
    pub commutative: bool,
    pub failure: Option<String>,
}

/// Exhaustively checks closure, associativity, a two-sided identity and
/// two-sided inverses; reports commutativity as a separate flag.
pub fn verify_group_table(t: &CayleyTable) -> GroupCheck {
    let n = t.elements.len();
    let fail = |msg: String| GroupCheck {
        is_group: false,
        commutative: false,
        failure: Some(msg),
    };

    if n == 0 || t.table.len() != n || t.table.iter().any(|row| row.len() != n) {
        return fail("table shape does not match element count".into());
    }
    if let Some((i, j)) = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| t.table[i][j] >= n)
    {
        return fail(format!("entry ({i},{j}) leaves the element set"));
    }

    let identity = (0..n).find(|&e| (0..n).all(|a| t.table[e][a] == a && t.table[a][e] == a));
    let Some(e) = identity else {
        return fail("no two-sided identity".into());
    };

    for a in 0..n {
        let has_inverse = (0..n).any(|b| t.table[a][b] == e && t.table[b][a] == e);
        if !has_inverse {
            return fail(format!("element {:?} has no two-sided inverse", t.elements[a]));
        }
    }

    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if t.table[a][t.table[b][c]] != t.table[t.table[a][b]][c] {
                    return fail(format!("associativity fails at triple ({a},{b},{c})"));
                }
            }
        }
    }

    let commutative = (0..n).all(|a| (0..n).all(|b| t.table[a][b] == t.table[b][a]));
    GroupCheck {
        is_group: true,
        commutative,
        failure: None,
    }
}

/// A finite group backed by a validated Cayley table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyGroup {
    elements: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    commutative: bool,
}

impl CayleyGroup {
    /// Validates the table exhaustively. Quadratic and cubic scans; intended
    /// for tables loaded from files or built from small examples.
    pub fn from_table(t: CayleyTable) -> Result<Self, GroupError> {
        let check = verify_group_table(&t);
        if !check.is_group {
            return Err(GroupError::NotAGroup {
                reason: check.failure.unwrap_or_default(),
            });
        }
        let n = t.elements.len();
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| t.table[e][a] == a && t.table[a][e] == a))
            .expect("verified table has an identity");
        Ok(CayleyGroup {
            elements: t.elements,
            table: t.table,
            identity,
            commutative: check.commutative,
        })
    }

    /// The full permutation group of degree `n`, labeled by image lists.
    ///
    /// Group laws hold by construction (composition of bijections), so the
    /// exhaustive table check is skipped; `n! <= 8!` keeps this desk-scale.
    pub fn symmetric(n: usize) -> Result<Self, GroupError> {
        if n == 0 || n > 8 {
            return Err(GroupError::DegreeOutOfRange { degree: n });
        }
        let perms = Permutation::enumerate(n);
        let index_of = |p: &Permutation| {
            perms
                .binary_search_by(|q| q.image().cmp(p.image()))
                .expect("composition stays within the enumeration")
        };
        let table: Vec<Vec<usize>> = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| index_of(&p.compose(q).expect("equal degrees")))
                    .collect()
            })
            .collect();
        let identity = index_of(&Permutation::identity(n));
        Ok(CayleyGroup {
            elements: perms.iter().map(Permutation::to_string).collect(),
            table,
            identity,
            commutative: n <= 2,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn identity_index(&self) -> usize {
        self.identity
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse_of(&self, a: usize) -> usize {
        (0..self.order())
            .find(|&b| self.op(a, b) == self.identity && self.op(b, a) == self.identity)
            .expect("every element of a verified group has an inverse")
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == label)
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    fn resolve(&self, candidate: &[String]) -> Result<Vec<usize>, GroupError> {
        candidate
            .iter()
            .map(|l| {
                self.index_of(l).ok_or_else(|| GroupError::UnknownElement {
                    label: l.clone(),
                })
            })
            .collect()
    }

    /// The two-condition subgroup criterion: closure under the operation and
    /// under inverses. Identity membership follows. Empty candidates are not
    /// subgroups.
    pub fn is_subgroup(&self, candidate: &[String]) -> Result<bool, GroupError> {
        let idx = self.resolve(candidate)?;
        Ok(self.is_subgroup_indices(&idx))
    }

    pub fn is_subgroup_indices(&self, candidate: &[usize]) -> bool {
        let set: BTreeSet<usize> = candidate.iter().copied().collect();
        if set.is_empty() {
            return false;
        }
        for &a in &set {
            if !set.contains(&self.inverse_of(a)) {
                return false;
            }
            for &b in &set {
                if !set.contains(&self.op(a, b)) {
                    return false;
                }
            }
        }
        true
    }

    /// The left cosets `a ∘ H` of a subgroup, as a partition of the element
    /// labels. Cosets appear in first-appearance order of their
    /// representatives.
    pub fn left_cosets(&self, subgroup: &[String]) -> Result<Partition<String>, GroupError> {
        let h = self.resolve(subgroup)?;
        if !self.is_subgroup_indices(&h) {
            return Err(GroupError::NotASubgroup);
        }
        let mut assigned = vec![false; self.order()];
        let mut classes: Vec<Vec<String>> = Vec::new();
        for a in 0..self.order() {
            if assigned[a] {
                continue;
            }
            let mut coset: Vec<usize> = h.iter().map(|&x| self.op(a, x)).collect();
            coset.sort_unstable();
            coset.dedup();
            for &m in &coset {
                assigned[m] = true;
            }
            classes.push(coset.iter().map(|&m| self.elements[m].clone()).collect());
        }
        Ok(partition_from_classes(classes))
    }

    /// Exhaustive check of `f(x ∘ y) = f(x) ⋆ f(y)` for a total map given as
    /// index pairs `x -> f(x)`.
    pub fn is_homomorphism(
        &self,
        map: &[usize],
        codomain: &CayleyGroup,
    ) -> Result<bool, GroupError> {
        if map.len() != self.order() {
            return Err(GroupError::MapNotTotal {
                expected: self.order(),
                got: map.len(),
            });
        }
        if let Some(&bad) = map.iter().find(|&&v| v >= codomain.order()) {
            return Err(GroupError::UnknownElement {
                label: format!("codomain index {bad}"),
            });
        }
        for x in 0..self.order() {
            for y in 0..self.order() {
                if map[self.op(x, y)] != codomain.op(map[x], map[y]) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

fn partition_from_classes(classes: Vec<Vec<String>>) -> Partition<String> {
    // Partition has no public constructor for raw classes; rebuild through
    // the quotient machinery using the "same class" relation.
    let lookup = classes.clone();
    let carrier: Vec<String> = classes.into_iter().flatten().collect();
    let rel = crate::quotient::EquivalenceRelation::new(move |x: &String, y: &String| {
        lookup
            .iter()
            .any(|class| class.contains(x) && class.contains(y))
    });
    crate::quotient::partition(&carrier, &rel).expect("cosets partition the group")
}

/// The symmetry group of the water molecule: identity, the half-turn about
/// the principal axis, and the two mirror reflections. Every non-identity
/// element is an involution and the product of two distinct non-identity
/// elements is the third.
pub fn c2v_group() -> CayleyGroup {
    let elements = ["e", "C2", "sigma_v", "sigma_v'"];
    // Klein four-group table: x*x = e, and distinct non-identity elements
    // multiply to the remaining one.
    let table = vec![
        vec![0, 1, 2, 3],
        vec![1, 0, 3, 2],
        vec![2, 3, 0, 1],
        vec![3, 2, 1, 0],
    ];
    CayleyGroup::from_table(CayleyTable {
        elements: elements.iter().map(|s| s.to_string()).collect(),
        table,
    })
    .expect("the reflection table satisfies the group axioms")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> CayleyGroup {
        CayleyGroup::symmetric(3).unwrap()
    }

    #[test]
    fn symmetric_group_table_passes_the_exhaustive_check() {
        let g = p3();
        let check = verify_group_table(&CayleyTable {
            elements: g.elements().to_vec(),
            table: g.table().to_vec(),
        });
        assert!(check.is_group);
        assert!(!check.commutative, "P3 is non-commutative");
    }

    #[test]
    fn c2v_is_a_commutative_group() {
        let g = c2v_group();
        let check = verify_group_table(&CayleyTable {
            elements: g.elements().to_vec(),
            table: g.table().to_vec(),
        });
        assert!(check.is_group);
        assert!(check.commutative);
    }

    #[test]
    fn c2v_products() {
        let g = c2v_group();
        let c2 = g.index_of("C2").unwrap();
        let sv = g.index_of("sigma_v").unwrap();
        let svp = g.index_of("sigma_v'").unwrap();
        assert_eq!(g.op(c2, c2), g.identity_index());
        assert_eq!(g.op(sv, svp), c2);
        for x in 0..g.order() {
            assert_eq!(g.op(g.identity_index(), x), x);
        }
    }

    #[test]
    fn tables_load_from_json() {
        let text = r#"{"elements": ["+1", "-1"], "table": [[0, 1], [1, 0]]}"#;
        let table: CayleyTable = serde_json::from_str(text).unwrap();
        let g = CayleyGroup::from_table(table).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.identity_index(), 0);
        assert!(g.is_commutative());
    }

    #[test]
    fn broken_inverse_row_is_rejected() {
        // Row for the second element sends everything to itself, so no
        // element composes with it back to the identity.
        let t = CayleyTable {
            elements: vec!["e".into(), "a".into()],
            table: vec![vec![0, 1], vec![1, 1]],
        };
        let check = verify_group_table(&t);
        assert!(!check.is_group);
        assert!(check.failure.is_some());
    }

    #[test]
    fn transposition_subgroup_of_p3() {
        let g = p3();
        assert!(g
            .is_subgroup(&["1 2 3".into(), "2 1 3".into()])
            .unwrap());
        assert!(g.is_subgroup(&["1 2 3".into()]).unwrap());
        // A 3-cycle alone is not closed: its square is missing.
        assert!(!g.is_subgroup(&["2 3 1".into()]).unwrap());
        assert!(!g.is_subgroup_indices(&[]));
    }

    #[test]
    fn unknown_elements_are_reported() {
        let g = p3();
        assert!(matches!(
            g.is_subgroup(&["9 9 9".into()]),
            Err(GroupError::UnknownElement { .. })
        ));
    }

    #[test]
    fn cosets_partition_p3() {
        let g = p3();
        let h = ["1 2 3".to_string(), "2 1 3".to_string()];
        let cosets = g.left_cosets(&h).unwrap();
        assert_eq!(cosets.len(), 3);
        for class in cosets.classes() {
            assert_eq!(class.len(), 2);
        }
        assert_eq!(cosets.carrier_len(), g.order());
    }

    #[test]
    fn whole_group_and_trivial_subgroup_cosets() {
        let g = p3();
        let all: Vec<String> = g.elements().to_vec();
        assert_eq!(g.left_cosets(&all).unwrap().len(), 1);
        let trivial = ["1 2 3".to_string()];
        assert_eq!(g.left_cosets(&trivial).unwrap().len(), g.order());
    }

    #[test]
    fn cosets_require_a_subgroup() {
        let g = p3();
        assert!(matches!(
            g.left_cosets(&["2 3 1".to_string()]),
            Err(GroupError::NotASubgroup)
        ));
    }

    #[test]
    fn sign_map_is_a_homomorphism() {
        let g = p3();
        let c2 = CayleyGroup::from_table(CayleyTable {
            elements: vec!["+1".into(), "-1".into()],
            table: vec![vec![0, 1], vec![1, 0]],
        })
        .unwrap();
        let sign_map: Vec<usize> = g
            .elements()
            .iter()
            .map(|label| {
                let p: Permutation = label.parse().unwrap();
                if p.parity() == 1 {
                    0
                } else {
                    1
                }
            })
            .collect();
        assert!(g.is_homomorphism(&sign_map, &c2).unwrap());

        let identity_map: Vec<usize> = (0..g.order()).collect();
        assert!(g.is_homomorphism(&identity_map, &g).unwrap());

        // Constant map onto a non-identity element breaks f(e)*f(e) = f(e).
        let constant: Vec<usize> = vec![1; g.order()];
        assert!(!g.is_homomorphism(&constant, &c2).unwrap());

        let partial: Vec<usize> = vec![0; g.order() - 1];
        assert!(matches!(
            g.is_homomorphism(&partial, &c2),
            Err(GroupError::MapNotTotal { .. })
        ));
        let out_of_range: Vec<usize> = vec![9; g.order()];
        assert!(matches!(
            g.is_homomorphism(&out_of_range, &c2),
            Err(GroupError::UnknownElement { .. })
        ));
    }

    #[test]
    fn neutral_element_is_unique() {
        let g = p3();
        for e2 in 0..g.order() {
            if (0..g.order()).all(|a| g.op(e2, a) == a) {
                assert_eq!(e2, g.identity_index());
            }
        }
    }

    #[test]
    fn cancellation_holds() {
        let g = c2v_group();
        for a in 0..g.order() {
            for b in 0..g.order() {
                for c in 0..g.order() {
                    if g.op(a, b) == g.op(a, c) {
                        assert_eq!(b, c);
                    }
                }
            }
        }
    }
}
