//! Term orders.

use super::Monomial;
use std::cmp::Ordering;

/// A term order: total, multiplicative, with 1 minimal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic over all variables.
    GrevLex,
    /// Lexicographic, earlier variables dominate.
    Lex,
    /// Ordered partition of the variables; earlier groups dominate, graded
    /// reverse lexicographic within each group. This is the elimination order
    /// when the dropped variables form the leading group.
    Block(Vec<Vec<usize>>),
}

fn grevlex_on(vars: &[usize], a: &Monomial, b: &Monomial) -> Ordering {
    let da: u32 = vars.iter().map(|&i| a.exp(i)).sum();
    let db: u32 = vars.iter().map(|&i| b.exp(i)).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        other => return other,
    }
    for &i in vars.iter().rev() {
        match a.exp(i).cmp(&b.exp(i)) {
            Ordering::Equal => {}
            // smaller exponent in the last differing variable wins
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match self {
            MonomialOrder::GrevLex => {
                let all: Vec<usize> = (0..a.nvars()).collect();
                grevlex_on(&all, a, b)
            }
            MonomialOrder::Lex => {
                for i in 0..a.nvars() {
                    match a.exp(i).cmp(&b.exp(i)) {
                        Ordering::Equal => {}
                        other => return other,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Block(groups) => {
                for g in groups {
                    match grevlex_on(g, a, b) {
                        Ordering::Equal => {}
                        other => return other,
                    }
                }
                Ordering::Equal
            }
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == Ordering::Less { b } else { a }
    }

    /// Monotone sort key for pair selection: per-group degrees in precedence
    /// order, so the queue drains small monomials (under this order) first.
    pub fn selection_key(&self, m: &Monomial) -> Vec<u32> {
        match self {
            MonomialOrder::GrevLex | MonomialOrder::Lex => vec![m.total_degree()],
            MonomialOrder::Block(groups) => groups
                .iter()
                .map(|g| g.iter().map(|&i| m.exp(i)).sum())
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn grevlex_basics() {
        let o = MonomialOrder::GrevLex;
        // degree first
        assert_eq!(o.cmp(&m(&[2, 0]), &m(&[0, 1])), Ordering::Greater);
        // same degree: x^2 > xy > y^2 for x before y
        assert_eq!(o.cmp(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 1]), &m(&[0, 2])), Ordering::Greater);
        // classic grevlex separator: x*z < y^2 in (x,y,z)
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(o.cmp(&m(&[0, 0, 0]), &m(&[0, 1, 0])), Ordering::Less);
    }

    #[test]
    fn lex_basics() {
        let o = MonomialOrder::Lex;
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 2]), &m(&[1, 3])), Ordering::Less);
    }

    #[test]
    fn block_order_eliminates() {
        // variables: 0,1 dropped; 2 retained
        let o = MonomialOrder::Block(vec![vec![0, 1], vec![2]]);
        // any monomial containing a dropped variable beats any retained-only one
        assert_eq!(o.cmp(&m(&[0, 1, 0]), &m(&[0, 0, 7])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 0, 2]), &m(&[0, 0, 1])), Ordering::Greater);
    }
}
