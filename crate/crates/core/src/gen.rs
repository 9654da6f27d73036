//! Seeded random instances: `v_i w_j := β(i, j) v_{α(i, j)}` for random
//! maps α and β, optionally with a prescribed number of components and
//! made star-multiplicative afterwards.
//!
//! The random stream is ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
//! `seed_from_u64(seed)`. For each pair `(i, j)` in row-major order the
//! generator draws, in this order: the Bernoulli(density) inclusion flag,
//! then α from the allowed pool, then β.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::connect::components;
use crate::error::{Error, Result};
use crate::scalar::{Coefficients, FieldSpec, Scalar};
use crate::table::{ActionTable, Entry, Parts};

/// Retry budget when an exact component count is requested.
pub const MAX_ATTEMPTS: usize = 200;

#[derive(Debug, Clone, PartialEq)]
pub struct GenSpec {
    pub v_size: usize,
    pub w_size: usize,
    /// Probability that a given pair `(i, j)` has a nonzero product.
    pub density: f64,
    pub seed: u64,
    pub field: FieldSpec,
    pub target_components: Option<usize>,
    pub star_multiplicative: bool,
}

impl GenSpec {
    pub fn new(v_size: usize, w_size: usize, density: f64, seed: u64) -> Self {
        GenSpec {
            v_size,
            w_size,
            density,
            seed,
            field: FieldSpec::Rational,
            target_components: None,
            star_multiplicative: false,
        }
    }

    pub fn field(mut self, field: FieldSpec) -> Self {
        self.field = field;
        self
    }

    pub fn components(mut self, target: usize) -> Self {
        self.target_components = Some(target);
        self
    }

    pub fn star_multiplicative(mut self, on: bool) -> Self {
        self.star_multiplicative = on;
        self
    }

    fn validate(&self) -> Result<()> {
        self.field.validate()?;
        if !(0.0..=1.0).contains(&self.density) {
            return Err(Error::InvalidSpec(format!(
                "density {} is outside [0, 1]",
                self.density
            )));
        }
        if let Some(c) = self.target_components {
            if c > self.v_size || (c == 0 && self.v_size > 0) {
                return Err(Error::InvalidSpec(format!(
                    "cannot split {} indices into {c} components",
                    self.v_size
                )));
            }
        }
        Ok(())
    }
}

/// Builds the instance described by `spec`. Equal specs give equal tables.
pub fn generate(spec: &GenSpec) -> Result<ActionTable> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);

    let pools: Vec<Vec<u32>> = match spec.target_components {
        Some(c) if c > 0 => {
            let mut order: Vec<u32> = (0..spec.v_size as u32).collect();
            order.shuffle(&mut rng);
            let (base, extra) = (spec.v_size / c, spec.v_size % c);
            let mut rest = order.as_slice();
            (0..c)
                .map(|p| {
                    let (head, tail) = rest.split_at(base + usize::from(p < extra));
                    rest = tail;
                    head.to_vec()
                })
                .collect()
        }
        _ => vec![(0..spec.v_size as u32).collect()],
    };
    let mut pool_of = vec![0u32; spec.v_size];
    for (p, pool) in pools.iter().enumerate() {
        for &i in pool {
            pool_of[i as usize] = p as u32;
        }
    }

    let attempts = if spec.target_components.is_some() {
        MAX_ATTEMPTS
    } else {
        1
    };
    for _ in 0..attempts {
        let parts = draw(spec, &pools, &pool_of, &mut rng);
        let table = ActionTable::from_parts(spec.field, spec.v_size, spec.w_size, parts)?;
        if let Some(c) = spec.target_components {
            if components(&table).len() != c {
                continue;
            }
        }
        return Ok(if spec.star_multiplicative {
            symmetrize(&table)
        } else {
            table
        });
    }
    Err(Error::Unsatisfiable {
        target: spec.target_components.unwrap_or(0),
        attempts,
    })
}

fn draw(spec: &GenSpec, pools: &[Vec<u32>], pool_of: &[u32], rng: &mut ChaCha8Rng) -> Parts {
    let expected = (spec.v_size as f64 * spec.w_size as f64 * spec.density) as usize;
    let mut parts = Parts {
        sources: Vec::with_capacity(expected),
        columns: Vec::with_capacity(expected),
        targets: Vec::with_capacity(expected),
        coeffs: Coefficients::with_capacity(spec.field, expected),
    };
    for i in 0..spec.v_size {
        let pool = &pools[pool_of[i] as usize];
        for j in 0..spec.w_size {
            if !rng.gen_bool(spec.density) {
                continue;
            }
            let k = pool[rng.gen_range(0..pool.len())];
            parts.sources.push(i as u32);
            parts.columns.push(j as u32);
            parts.targets.push(k);
            parts.coeffs.push(random_nonzero(spec.field, rng));
        }
    }
    parts
}

/// Rationals: numerator uniform over the nonzero integers in `[-9, 9]`,
/// denominator uniform in `[1, 9]`. Prime fields: uniform over `1..p`.
fn random_nonzero(field: FieldSpec, rng: &mut ChaCha8Rng) -> Scalar {
    match field {
        FieldSpec::Rational => {
            let mut num: i64 = rng.gen_range(-9..=8);
            if num >= 0 {
                num += 1;
            }
            let den: i64 = rng.gen_range(1..=9);
            let g = num_integer::gcd(num, den);
            Scalar::Rational(BigRational::new_raw(
                BigInt::from(num / g),
                BigInt::from(den / g),
            ))
        }
        FieldSpec::Prime(p) => Scalar::Prime {
            value: rng.gen_range(1..p),
            modulus: p,
        },
    }
}

/// Makes the basis star-multiplicative: for every entry `(b, j, a, _)` with
/// `a != b` and no entry of the form `(a, _, b, _)`, appends a fresh W-index
/// `j'` and the entry `(a, j', b, 1)`. One pass suffices, since each added
/// entry's own reverse requirement is met by the entry that caused it.
pub fn symmetrize(table: &ActionTable) -> ActionTable {
    let mut pairs: HashSet<(usize, usize)> = table.support().map(|(i, _, k)| (i, k)).collect();
    let mut added: Vec<(usize, usize)> = Vec::new();
    for (b, _, a) in table.support() {
        if a != b && pairs.insert((a, b)) {
            added.push((a, b));
        }
    }
    if added.is_empty() {
        return table.clone();
    }

    let w_size = table.w_size();
    let one = Scalar::one(table.field());
    let entries: Vec<Entry> = table
        .entries()
        .chain(
            added
                .iter()
                .enumerate()
                .map(|(n, &(a, b))| Entry::new(a, w_size + n, b, one.clone())),
        )
        .collect();
    let w_labels = table.w_labels().map(|labels| {
        let mut names = labels.names().to_vec();
        for n in 0..added.len() {
            let mut name = format!("sym{n}");
            while labels.id(&name).is_some() {
                name.push('\'');
            }
            names.push(name);
        }
        names
    });
    ActionTable::new(entries, table.v_size(), w_size + added.len(), table.field())
        .and_then(|t| t.with_labels(table.v_labels().map(|l| l.names().to_vec()), w_labels))
        .expect("symmetrized entries stay valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minimal::check_star_multiplicative;
    use crate::testing::{e1, random_table, table};
    use proptest::prelude::*;

    #[test]
    fn single_pair_targets_itself() {
        let t = generate(&GenSpec::new(1, 1, 1.0, 7)).unwrap();
        assert_eq!(t.support().collect::<Vec<_>>(), vec![(0, 0, 0)]);
    }

    #[test]
    fn zero_density_is_empty() {
        let t = generate(&GenSpec::new(100, 10, 0.0, 3)).unwrap();
        assert!(t.is_empty());
        assert_eq!(components(&t).len(), 100);
    }

    #[test]
    fn exact_component_count() {
        let t = generate(&GenSpec::new(50, 5, 0.3, 42).components(4)).unwrap();
        assert_eq!(components(&t).len(), 4);
    }

    #[test]
    fn unreachable_component_count() {
        let err = generate(&GenSpec::new(10, 2, 0.0, 1).components(3)).unwrap_err();
        assert_eq!(
            err,
            Error::Unsatisfiable {
                target: 3,
                attempts: MAX_ATTEMPTS
            }
        );
    }

    #[test]
    fn bad_specs() {
        assert!(generate(&GenSpec::new(3, 1, 1.5, 0)).is_err());
        assert!(generate(&GenSpec::new(3, 1, 0.5, 0).components(4)).is_err());
        assert!(generate(&GenSpec::new(3, 1, 0.5, 0).field(FieldSpec::Prime(4))).is_err());
    }

    #[test]
    fn same_seed_same_table() {
        let spec = GenSpec::new(40, 6, 0.2, 99).field(FieldSpec::Prime(101));
        assert_eq!(generate(&spec).unwrap(), generate(&spec).unwrap());
        let other = GenSpec {
            seed: 100,
            ..spec.clone()
        };
        assert_ne!(generate(&other).unwrap(), generate(&spec).unwrap());
    }

    #[test]
    fn symmetrize_e1() {
        let s = symmetrize(&e1());
        assert_eq!(s.w_size(), 2);
        assert_eq!(
            s.support().collect::<Vec<_>>(),
            vec![(0, 0, 1), (1, 1, 0), (2, 0, 2)]
        );
        assert!(check_star_multiplicative(&s).holds());
        assert_eq!(symmetrize(&s), s);
        let empty = table(3, 1, &[]);
        assert_eq!(symmetrize(&empty), empty);
    }

    proptest! {
        #[test]
        fn symmetrize_is_one_pass_and_keeps_components(t in random_table(12, 4, FieldSpec::Rational)) {
            let s = symmetrize(&t);
            prop_assert!(check_star_multiplicative(&s).holds());
            prop_assert_eq!(&symmetrize(&s), &s);
            prop_assert_eq!(components(&s), components(&t));
        }

        #[test]
        fn generated_tables_revalidate(v in 1usize..30, w in 1usize..6, d in 0.0f64..=1.0, seed: u64) {
            let t = generate(&GenSpec::new(v, w, d, seed)).unwrap();
            let rebuilt = ActionTable::new(t.entries().collect(), v, w, t.field()).unwrap();
            prop_assert_eq!(rebuilt, t);
        }
    }
}
