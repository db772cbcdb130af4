use super::Term;

/// Every ground term with exactly `size` leaves.
///
/// There are `Catalan(size - 1) * 2^size` of them; size 7 gives 16896.
pub fn ground_terms_of_size(size: usize) -> Vec<Term> {
    let mut by_size: Vec<Vec<Term>> = vec![Vec::new(), vec![Term::S, Term::K]];
    for n in 2..=size {
        let mut terms = Vec::new();
        for left in 1..n {
            for f in &by_size[left] {
                for a in &by_size[n - left] {
                    terms.push(Term::app(f.clone(), a.clone()));
                }
            }
        }
        by_size.push(terms);
    }
    by_size.into_iter().nth(size).unwrap_or_default()
}
