//! Invariant-theoretic computations over a graded decomposition: the
//! fixed subring (identity component), its minimal generators by
//! greedy degree-by-degree closure, certificates that a component is
//! spanned by claimed module generators, and the grading analogue of
//! the determinant of the defining representation.

use std::collections::BTreeMap;

use crate::algebra::BasisTable;
use crate::error::{Error, Result};
use crate::grading::{g_degree, GradedBasis, Grading, GroupElement, FiniteGroup};
use crate::linalg::{row_from_entries, RowSpace, SparseRow};
use crate::poly::NcPoly;
use crate::rewrite::ReductionSystem;
use crate::scalar::Scalar;
use crate::word::Word;

/// Minimal generator count above which a fixed ring cannot be
/// generated in the way a polynomial-bounded presentation would allow;
/// used purely as a reporting flag.
pub const OBSTRUCTION_THRESHOLD: usize = 3;

/// Minimal generators of the fixed subring found up to a degree
/// bound, with the count flag.
#[derive(Debug, Clone)]
pub struct GeneratorReport {
    /// `(degree, generator)` pairs in the order found (by degree, then
    /// ascending word order within a degree). Generators are normal
    /// words of the ambient algebra.
    pub generators: Vec<(usize, NcPoly)>,
    /// Every fixed-ring element of degree at most this is a polynomial
    /// in the generators.
    pub complete_to: usize,
    /// True when more than `OBSTRUCTION_THRESHOLD` generators were
    /// needed.
    pub obstruction_flag: bool,
}

impl GeneratorReport {
    pub fn degrees(&self) -> Vec<usize> {
        self.generators.iter().map(|(d, _)| *d).collect()
    }
}

/// Verification record for one group-degree component, produced by
/// `verify_component`.
#[derive(Debug, Clone)]
pub struct ComponentCertificate {
    pub element: GroupElement,
    pub module_generators: Vec<Word>,
    pub verified_to: usize,
    /// Whether the products generator * fixed-ring span the component
    /// at every degree up to `verified_to`.
    pub span_ok: bool,
    /// Degrees at which the span comparison failed.
    pub failed_degrees: Vec<usize>,
    /// True when there is a single module generator, the span checks
    /// pass, and the component dimensions equal the shifted fixed-ring
    /// dimensions — i.e. the component looks free of rank one.
    pub free_rank_one: bool,
}

/// The grading analogue of the determinant for a two-generator
/// algebra: the square of the first generator's degree times the
/// square of the second's.
#[derive(Debug, Clone)]
pub struct CodeterminantReport {
    pub element: GroupElement,
    pub trivial: bool,
}

/// The identity component of a graded decomposition, as a
/// degree-by-degree table through degree `n`.
pub fn fixed_ring_basis(gb: &GradedBasis, n: usize) -> Result<BasisTable> {
    if gb.max_degree() < n {
        return Err(Error::BoundTooSmall {
            bound: gb.max_degree(),
            needed: n,
        });
    }
    Ok(gb.fixed_table(n))
}

/// Degree-indexed span bookkeeping for a subalgebra of the fixed ring:
/// coefficient rows live over the fixed basis words of each degree.
struct SubalgebraScan<'a> {
    sys: &'a ReductionSystem,
    indexes: Vec<BTreeMap<Word, usize>>,
    spans: Vec<RowSpace>,
    basis: Vec<Vec<NcPoly>>,
}

impl<'a> SubalgebraScan<'a> {
    fn new(fixed: &'a BasisTable, sys: &'a ReductionSystem, n: usize) -> Result<Self> {
        if fixed.rows().len() <= n {
            return Err(Error::Config(format!(
                "fixed-ring table covers degrees below {}, need {}",
                fixed.rows().len(),
                n
            )));
        }
        let indexes: Vec<BTreeMap<Word, usize>> = (0..=n)
            .map(|deg| {
                fixed
                    .row(deg)
                    .iter()
                    .enumerate()
                    .map(|(i, w)| (w.clone(), i))
                    .collect()
            })
            .collect();
        let mut scan = SubalgebraScan {
            sys,
            indexes,
            spans: (0..=n).map(|_| RowSpace::new()).collect(),
            basis: vec![Vec::new(); n + 1],
        };
        // Seed with the unit.
        if let Some(&i) = scan.indexes[0].get(&Word::empty()) {
            scan.spans[0].insert(vec![(i, Scalar::one())]);
            scan.basis[0].push(NcPoly::one());
        }
        Ok(scan)
    }

    fn row_of(&self, deg: usize, p: &NcPoly) -> Result<SparseRow> {
        let index = &self.indexes[deg];
        let mut entries = Vec::with_capacity(p.term_count());
        for (w, c) in p.terms() {
            match index.get(w) {
                Some(&i) => entries.push((i, c.clone())),
                None => {
                    return Err(Error::Config(format!(
                        "a product left the fixed component at degree {deg}; \
                         the grading is inconsistent with the reduction system"
                    )))
                }
            }
        }
        Ok(row_from_entries(entries))
    }

    /// Extends the degree-`deg` span by all products
    /// generator * (already-known subalgebra element).
    fn close_products(&mut self, deg: usize, gens: &[(usize, NcPoly)]) -> Result<()> {
        for (d, gp) in gens {
            if *d == 0 || *d > deg {
                continue;
            }
            let bdeg = deg - d;
            for bi in 0..self.basis[bdeg].len() {
                let nf = self.sys.reduce(&gp.mul(&self.basis[bdeg][bi]));
                if nf.is_zero() {
                    continue;
                }
                let row = self.row_of(deg, &nf)?;
                if self.spans[deg].insert(row).is_some() {
                    self.basis[deg].push(nf);
                }
            }
        }
        Ok(())
    }
}

/// Greedy minimal generating set of the fixed subring through degree
/// `n`: at each degree, close the subalgebra generated so far under
/// products, then adjoin the fixed basis words still missing, in
/// ascending word order. The reduction system must be confluent
/// through degree `n`.
pub fn minimal_generators(
    fixed: &BasisTable,
    sys: &ReductionSystem,
    n: usize,
) -> Result<GeneratorReport> {
    if sys.confluence_bound() < n {
        return Err(Error::BoundTooSmall {
            bound: sys.confluence_bound(),
            needed: n,
        });
    }
    let mut scan = SubalgebraScan::new(fixed, sys, n)?;
    let mut gens: Vec<(usize, NcPoly)> = Vec::new();
    for deg in 1..=n {
        scan.close_products(deg, &gens)?;
        for (i, w) in fixed.row(deg).iter().enumerate() {
            if scan.spans[deg].insert(vec![(i, Scalar::one())]).is_some() {
                let p = NcPoly::from_word(w.clone());
                gens.push((deg, p.clone()));
                scan.basis[deg].push(p);
            }
        }
    }
    Ok(GeneratorReport {
        obstruction_flag: gens.len() > OBSTRUCTION_THRESHOLD,
        generators: gens,
        complete_to: n,
    })
}

/// Graded dimensions of the subalgebra generated by the given
/// elements, computed independently of how they were found; used to
/// re-verify a `GeneratorReport` against the fixed ring itself.
pub fn subalgebra_dims(
    gens: &[(usize, NcPoly)],
    fixed: &BasisTable,
    sys: &ReductionSystem,
    n: usize,
) -> Result<Vec<usize>> {
    if sys.confluence_bound() < n {
        return Err(Error::BoundTooSmall {
            bound: sys.confluence_bound(),
            needed: n,
        });
    }
    let mut normalized = Vec::with_capacity(gens.len());
    for (d, p) in gens {
        if *d == 0 {
            return Err(Error::Config("generators must have positive degree".into()));
        }
        let nf = sys.reduce(p);
        match nf.homogeneous_degree(sys.order().alphabet())? {
            Some(deg) if deg == *d => normalized.push((*d, nf)),
            Some(deg) => {
                return Err(Error::Config(format!(
                    "generator labeled degree {d} has degree {deg}"
                )))
            }
            None => return Err(Error::ZeroPolynomial),
        }
    }
    let mut scan = SubalgebraScan::new(fixed, sys, n)?;
    let mut dims = vec![scan.spans[0].rank()];
    for deg in 1..=n {
        scan.close_products(deg, &normalized)?;
        dims.push(scan.spans[deg].rank());
    }
    Ok(dims)
}

/// Checks that the products (module generator) * (fixed-ring basis)
/// span the whole group-degree-`g` component at every total degree up
/// to `n`, and whether the component looks free of rank one.
pub fn verify_component(
    gb: &GradedBasis,
    grading: &Grading,
    sys: &ReductionSystem,
    g: GroupElement,
    module_gens: &[Word],
    n: usize,
) -> Result<ComponentCertificate> {
    if sys.confluence_bound() < n {
        return Err(Error::BoundTooSmall {
            bound: sys.confluence_bound(),
            needed: n,
        });
    }
    if gb.max_degree() < n {
        return Err(Error::BoundTooSmall {
            bound: gb.max_degree(),
            needed: n,
        });
    }
    let alphabet = sys.order().alphabet();
    for m in module_gens {
        alphabet.check_word(m)?;
        if g_degree(grading, m) != g {
            return Err(Error::Config(format!(
                "module generator '{}' lies in component '{}', not '{}'",
                alphabet.display_word(m),
                grading.group().name(g_degree(grading, m)),
                grading.group().name(g)
            )));
        }
        if !sys.is_normal_word(m) {
            return Err(Error::Config(format!(
                "module generator '{}' is not a normal word",
                alphabet.display_word(m)
            )));
        }
    }
    let e = grading.group().identity();
    let mut failed_degrees = Vec::new();
    for t in 0..=n {
        let comp = gb.component(t, g);
        let index: BTreeMap<&Word, usize> =
            comp.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let mut space = RowSpace::new();
        for m in module_gens {
            let dm = alphabet.word_degree(m);
            if dm > t {
                continue;
            }
            for w in gb.component(t - dm, e) {
                let nf = sys.reduce(&NcPoly::from_word(m.concat(w)));
                let mut entries = Vec::with_capacity(nf.term_count());
                for (u, c) in nf.terms() {
                    match index.get(u) {
                        Some(&i) => entries.push((i, c.clone())),
                        None => {
                            return Err(Error::Config(format!(
                                "product escapes the component at degree {t}"
                            )))
                        }
                    }
                }
                space.insert(row_from_entries(entries));
            }
        }
        if space.rank() != comp.len() {
            failed_degrees.push(t);
        }
    }
    let span_ok = failed_degrees.is_empty();
    let free_rank_one = module_gens.len() == 1 && span_ok && {
        let dm = alphabet.word_degree(&module_gens[0]);
        (0..=n).all(|t| {
            let expected = if t >= dm {
                gb.component(t - dm, e).len()
            } else {
                0
            };
            gb.component(t, g).len() == expected
        })
    };
    Ok(ComponentCertificate {
        element: g,
        module_generators: module_gens.to_vec(),
        verified_to: n,
        span_ok,
        failed_degrees,
        free_rank_one,
    })
}

/// For two involutions generating a dihedral group, the element
/// `(g1 g2)^{(n-1)/2} g1` when the rotation order `n` is odd and
/// `(g1 g2)^{n/2}` when it is even — the longest element of the
/// corresponding Coxeter presentation.
pub fn longest_element(
    group: &FiniteGroup,
    g1: GroupElement,
    g2: GroupElement,
) -> Result<GroupElement> {
    let e = group.identity();
    if g1 == e || g2 == e || g1 == g2 {
        return Err(Error::Config(
            "need two distinct non-identity generators".into(),
        ));
    }
    if group.mul(g1, g1) != e || group.mul(g2, g2) != e {
        return Err(Error::Config("both generators must be involutions".into()));
    }
    if group.subgroup_generated(&[g1, g2]).len() != group.order() {
        return Err(Error::Config(
            "the two involutions must generate the whole group".into(),
        ));
    }
    let rot = group.mul(g1, g2);
    let n = group.element_order(rot);
    if 2 * n != group.order() {
        return Err(Error::Config(
            "the generators do not give a dihedral presentation".into(),
        ));
    }
    Ok(if n % 2 == 1 {
        group.mul(group.pow(rot, (n - 1) / 2), g1)
    } else {
        group.pow(rot, n / 2)
    })
}

/// `(deg g_0)^2 (deg g_1)^2` for a grading of a two-generator algebra,
/// with a flag for triviality. A nontrivial value certifies that the
/// coaction does not factor through the special linear quantum
/// subgroup.
pub fn hdet_codeterminant(grading: &Grading) -> Result<CodeterminantReport> {
    if grading.assignment().len() != 2 {
        return Err(Error::Config(
            "codeterminant is defined for exactly two generators".into(),
        ));
    }
    let g = grading.group();
    let a = grading.letter_degree(0);
    let b = grading.letter_degree(1);
    let m = g.mul(g.mul(a, a), g.mul(b, b));
    Ok(CodeterminantReport {
        element: m,
        trivial: m == g.identity(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{down_up, normal_basis};
    use crate::grading::{dihedral, graded_decompose, quaternion8, cyclic};

    fn swapped_setup(
        n: usize,
    ) -> (
        crate::algebra::Presentation,
        ReductionSystem,
        Grading,
        GradedBasis,
    ) {
        let p = down_up(&Scalar::zero(), &Scalar::one()).unwrap();
        let order = p.default_order();
        let (sys, basis) = normal_basis(&p, &order, n).unwrap();
        let grading = Grading::new(
            dihedral(8).unwrap(),
            p.alphabet(),
            &[
                ("u".to_string(), "r".to_string()),
                ("d".to_string(), "rho".to_string()),
            ],
        )
        .unwrap();
        let gb = graded_decompose(&basis, &grading).unwrap();
        (p, sys, grading, gb)
    }

    #[test]
    fn fixed_ring_dimensions_follow_hypersurface_pattern() {
        let (_, _, _, gb) = swapped_setup(8);
        let fixed = fixed_ring_basis(&gb, 8).unwrap();
        assert_eq!(fixed.dims(), vec![1, 0, 1, 0, 4, 0, 4, 0, 9]);
    }

    #[test]
    fn greedy_generators_of_the_dihedral_fixed_ring() {
        let (_p, sys, _, gb) = swapped_setup(8);
        let fixed = fixed_ring_basis(&gb, 8).unwrap();
        let report = minimal_generators(&fixed, &sys, 8).unwrap();
        assert_eq!(report.degrees(), vec![2, 4, 4, 4]);
        let shown: Vec<String> = report
            .generators
            .iter()
            .map(|(_, g)| g.display(sys.order()))
            .collect();
        assert_eq!(shown, vec!["u^2", "(ud)^2", "(du)^2", "d^4"]);
        assert!(report.obstruction_flag, "four generators exceed the threshold");
        // Reconstruction: the four generators really span the fixed
        // ring degree by degree.
        let dims = subalgebra_dims(&report.generators, &fixed, &sys, 8).unwrap();
        assert_eq!(dims, fixed.dims());
        // Minimality: dropping any generator loses some dimension.
        for skip in 0..report.generators.len() {
            let rest: Vec<_> = report
                .generators
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .map(|(_, g)| g.clone())
                .collect();
            let dims = subalgebra_dims(&rest, &fixed, &sys, 8).unwrap();
            assert_ne!(dims, fixed.dims(), "generator {skip} is redundant");
        }
    }

    #[test]
    fn quaternion_grading_needs_many_generators() {
        let p = down_up(&Scalar::zero(), &Scalar::one()).unwrap();
        let order = p.default_order();
        let (sys, basis) = normal_basis(&p, &order, 8).unwrap();
        let grading = Grading::new(
            quaternion8(),
            p.alphabet(),
            &[
                ("u".to_string(), "i".to_string()),
                ("d".to_string(), "j".to_string()),
            ],
        )
        .unwrap();
        let gb = graded_decompose(&basis, &grading).unwrap();
        let fixed = fixed_ring_basis(&gb, 8).unwrap();
        let report = minimal_generators(&fixed, &sys, 8).unwrap();
        assert!(report.obstruction_flag);
        assert!(report.generators.len() >= 7);
        assert_eq!(&report.degrees()[..3], &[4, 4, 4]);
    }

    #[test]
    fn component_certificates_for_the_swapped_assignment() {
        let (p, sys, grading, gb) = swapped_setup(8);
        let a = p.alphabet();
        let rho = grading.group().element_by_name("rho").unwrap();
        let d = a.word_from_names(&["d"]).unwrap();
        let cert = verify_component(&gb, &grading, &sys, rho, &[d], 8).unwrap();
        assert!(cert.span_ok);
        assert!(cert.free_rank_one);
        // Two generators are genuinely needed for the r component.
        let r = grading.group().element_by_name("r").unwrap();
        let u = a.word_from_names(&["u"]).unwrap();
        let dud = a.word_from_names(&["d", "u", "d"]).unwrap();
        let partial = verify_component(&gb, &grading, &sys, r, std::slice::from_ref(&u), 8).unwrap();
        assert!(!partial.span_ok);
        assert!(!partial.free_rank_one);
        let full = verify_component(&gb, &grading, &sys, r, &[u, dud], 8).unwrap();
        assert!(full.span_ok);
        assert!(!full.free_rank_one, "two generators cannot be free of rank one");
    }

    #[test]
    fn component_generator_must_match_component() {
        let (p, sys, grading, gb) = swapped_setup(6);
        let rho = grading.group().element_by_name("rho").unwrap();
        let u = p.alphabet().word_from_names(&["u"]).unwrap();
        assert!(verify_component(&gb, &grading, &sys, rho, &[u], 6).is_err());
    }

    #[test]
    fn longest_element_of_small_dihedral_groups() {
        let g6 = dihedral(6).unwrap();
        let r = g6.element_by_name("r").unwrap();
        let rho_r = g6.element_by_name("rho r").unwrap();
        let m = longest_element(&g6, r, rho_r).unwrap();
        assert_eq!(g6.name(m), "rho^2 r");
        let g8 = dihedral(8).unwrap();
        let r8 = g8.element_by_name("r").unwrap();
        let rho_r8 = g8.element_by_name("rho r").unwrap();
        let m8 = longest_element(&g8, r8, rho_r8).unwrap();
        assert_eq!(g8.name(m8), "rho^2", "even case gives the central rotation");
    }

    #[test]
    fn longest_element_rejects_bad_generators() {
        let g6 = dihedral(6).unwrap();
        let rho = g6.element_by_name("rho").unwrap();
        let r = g6.element_by_name("r").unwrap();
        // rho is not an involution.
        assert!(longest_element(&g6, rho, r).is_err());
        // Two reflections that do not generate: impossible in D6 with
        // distinct reflections, so use the same one twice.
        assert!(longest_element(&g6, r, r).is_err());
    }

    #[test]
    fn codeterminant_detects_nontrivial_grading() {
        let p = down_up(&Scalar::zero(), &Scalar::one()).unwrap();
        let stated = Grading::new(
            dihedral(8).unwrap(),
            p.alphabet(),
            &[
                ("u".to_string(), "rho".to_string()),
                ("d".to_string(), "r".to_string()),
            ],
        )
        .unwrap();
        let rep = hdet_codeterminant(&stated).unwrap();
        assert!(!rep.trivial);
        assert_eq!(stated.group().name(rep.element), "rho^2");
        let c2 = Grading::new(
            cyclic(2).unwrap(),
            p.alphabet(),
            &[
                ("u".to_string(), "g".to_string()),
                ("d".to_string(), "g".to_string()),
            ],
        )
        .unwrap();
        assert!(hdet_codeterminant(&c2).unwrap().trivial);
    }
}
