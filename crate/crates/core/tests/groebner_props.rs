mod common;

use gdminors::complex::{self, is_face};
use gdminors::groebner::{
    index_tuples, initial_ideal_gens, minor, verify_groebner, verify_groebner_with, Fp31,
    GroebnerOptions, Monomial, Rational,
};
use gdminors::{Cell, CellSet, GDMatrix, MinorsProblem};
use proptest::prelude::*;

fn small_problem() -> impl Strategy<Value = MinorsProblem> {
    (common::gd_matrix(4, 4), 2usize..=3)
        .prop_filter_map("r fits", |(x, r)| MinorsProblem::new(x, r).ok())
}

/// `(rows, cols)` of a random square submatrix.
fn submatrix() -> impl Strategy<Value = (GDMatrix, Vec<usize>, Vec<usize>)> {
    common::gd_matrix(6, 6)
        .prop_flat_map(|x| {
            let k = 1..=x.n().min(x.m()).min(4);
            (Just(x), k)
        })
        .prop_flat_map(|(x, k)| {
            let rs = index_tuples(x.n(), k);
            let cs = index_tuples(x.m(), k);
            (Just(x), prop::sample::select(rs), prop::sample::select(cs))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn leading_term_is_the_main_diagonal((x, rows, cols) in submatrix()) {
        let f = minor::<Rational>(&x, &rows, &cols).unwrap();
        prop_assume!(!f.is_zero());
        let diag: CellSet = rows.iter().zip(&cols).map(|(&i, &j)| Cell::new(i, j)).collect();
        prop_assert!(diag.iter().all(|&c| x.is_nonzero(c)));
        let (lead, coeff) = f.leading_term().unwrap();
        prop_assert_eq!(lead, Monomial::from_cells(&x, &diag).unwrap());
        prop_assert_eq!(coeff, Rational::from_integer(1.into()));
        prop_assert!(f.terms().all(|(t, _)| t.is_square_free()));
    }

    /// Every term of the determinant uses a variable from the lower-left
    /// block on rows `i..` and columns `..=i`.
    #[test]
    fn determinant_lies_in_the_lower_left_block((x, rows, cols) in submatrix()) {
        let f = minor::<Rational>(&x, &rows, &cols).unwrap();
        let k = rows.len();
        let index = |c: Cell| x.cells().binary_search(&c).unwrap();
        let (rows, cols) = (&rows, &cols);
        for i in 1..=k {
            let block: Vec<usize> = (i..=k)
                .flat_map(|a| (1..=i).map(move |b| Cell::new(rows[a - 1], cols[b - 1])))
                .filter(|&c| x.is_nonzero(c))
                .map(index)
                .collect();
            for (t, _) in f.terms() {
                prop_assert!(block.iter().any(|&v| t.exponents()[v] > 0));
            }
            if let [only] = block[..] {
                prop_assert!(f.terms().all(|(t, _)| t.exponents()[only] == 1));
            }
        }
    }

    #[test]
    fn prime_and_rational_agree(p in small_problem()) {
        let q = verify_groebner(&p).unwrap();
        let f = verify_groebner_with::<Fp31>(&p, &GroebnerOptions::default()).unwrap();
        prop_assert!(q.groebner);
        prop_assert_eq!(q, f);
    }
}

#[test]
fn minors_form_a_groebner_basis() {
    for n in 2..=4 {
        for m in 2..=4 {
            for x in common::all_shapes(n, m) {
                for r in 2..=3 {
                    let Ok(p) = MinorsProblem::new(x.clone(), r) else {
                        continue;
                    };
                    let rep = verify_groebner(&p).unwrap();
                    assert!(rep.groebner, "{:?} r={r}: {:?}", x.spec(), rep.failing_pair);
                }
            }
        }
    }
}

/// A cell set is a face exactly when it avoids every initial generator, and
/// the facets are the maximal such sets.
#[test]
fn initial_ideal_is_the_stanley_reisner_ideal() {
    for n in 2..=4 {
        for m in 2..=4 {
            for x in common::all_shapes(n, m) {
                if x.num_cells() > 12 {
                    continue;
                }
                for r in 2..=3 {
                    let Ok(p) = MinorsProblem::new(x.clone(), r) else {
                        continue;
                    };
                    let gens: Vec<CellSet> = initial_ideal_gens(&p)
                        .iter()
                        .map(|g| g.support(&x))
                        .collect();
                    assert!(initial_ideal_gens(&p).iter().all(Monomial::is_square_free));
                    let k = complex::complex(&p).unwrap();
                    let cells = x.cells();
                    for s in 0u32..1 << cells.len() {
                        let f: CellSet = (0..cells.len())
                            .filter(|i| s >> i & 1 == 1)
                            .map(|i| cells[i])
                            .collect();
                        let avoids = gens.iter().all(|g| !g.is_subset(&f));
                        assert_eq!(is_face(&p, &f), avoids, "{:?} r={r} {f}", x.spec());
                        assert_eq!(k.contains_face(&f), avoids, "{:?} r={r} {f}", x.spec());
                    }
                }
            }
        }
    }
}
