//! Construction and storage of the `2^{M+N}` Baxter Q-functions.
//!
//! Free data are the single-index polynomials; the boson-fermion pair
//! functions are solved coefficient-wise from the defining three-term
//! relation; every larger subset is produced by the Wronskian determinant
//! formula. The QQ relations are then theorems about the table, verified
//! by the `verify` module rather than imposed, which keeps construction
//! and verification independent.
//!
//! Every stored function is normalized to 1 at the origin, and one of the
//! two boundary functions is pinned to the constant 1 (the empty-set
//! entry in the unbarred convention, the complement-side entry in the
//! barred one) -- never both at once. Model-specific vacuum
//! normalizations are out of scope: for a concrete length-L chain the
//! Q-functions pick up meromorphic vacuum factors which, for three
//! indices with gradings `(+,+,-)`, close into finite products of
//! `f(x) = prod_k (1 - x / w_k)` -- the two bosonic singles keep factor
//! 1, the fermionic single acquires `f(xq^{-1}) f(xq)`, the bosonic pair
//! `1/f(x)` and the mixed pairs `f(x)`. The synthetic families here have
//! no quantum space, so no such factors arise and the stored entries stay
//! polynomial as generated.

use std::collections::BTreeMap;
use std::io::{BufRead, Write};

use num_traits::{One, Zero};

use crate::poly::LaurentPoly;
use crate::prng::SplitMix64;
use crate::scalar::{self, Scalar};
use crate::subset::Subset;
use crate::tfun::wronskian;
use crate::twist::TwistData;
use crate::{Error, Result};

/// Normalization convention of the stored family.
///
/// Unbarred stores `Q_I` with `Q_∅ = 1`; barred stores the reflected
/// family (every spectral shift mirrored, `q -> q^{-1}`) with the
/// complement-side normalization.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Convention {
    Unbarred,
    Barred,
}

impl Convention {
    pub fn is_barred(self) -> bool {
        matches!(self, Convention::Barred)
    }

    pub fn name(self) -> &'static str {
        match self {
            Convention::Unbarred => "unbarred",
            Convention::Barred => "barred",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "unbarred" => Ok(Convention::Unbarred),
            "barred" => Ok(Convention::Barred),
            other => Err(Error::Parse(format!("unknown convention {other:?}"))),
        }
    }
}

/// Seeded generation parameters for the free single-index polynomials.
#[derive(Clone, Debug)]
pub struct GenConfig {
    pub seed: u64,
    /// Degree of each single `Q_i`, one entry per index.
    pub degrees: Vec<u32>,
    /// Numerators and denominators of random coefficients are bounded by
    /// this value.
    pub coeff_bound: u32,
    /// Resonance scan bound for twist validation.
    pub k_max: u32,
}

impl GenConfig {
    pub fn uniform(seed: u64, degree: u32, size: usize) -> Self {
        GenConfig {
            seed,
            degrees: vec![degree; size],
            coeff_bound: 9,
            k_max: 64,
        }
    }
}

/// The subset-indexed family `{Q_I}` in one normalization convention.
pub struct QHierarchy {
    twist: TwistData,
    convention: Convention,
    table: Vec<LaurentPoly>,
    seed: u64,
    degrees: Vec<u32>,
    /// Number of reseeding rounds the degenerate-input guard performed.
    pub gen_attempts: u32,
}

impl wronskian::QTable for QHierarchy {
    fn twist(&self) -> &TwistData {
        &self.twist
    }

    fn poly(&self, set: Subset) -> &LaurentPoly {
        &self.table[set.0 as usize]
    }
}

impl QHierarchy {
    /// Builds the full hierarchy from seeded singles. Deterministic in the
    /// seed; if a generated table degenerates (a vanishing entry or a
    /// broken normalization) the seed is bumped deterministically and the
    /// generation rerun.
    pub fn build(twist: TwistData, convention: Convention, cfg: &GenConfig) -> Result<Self> {
        let size = twist.size();
        assert_eq!(cfg.degrees.len(), size, "one degree per index");
        let deg_bound: u32 = cfg.degrees.iter().sum::<u32>().max(1);
        twist.require_generic(cfg.k_max.max(2 * deg_bound))?;
        for attempt in 0..16u32 {
            let seed = cfg.seed.wrapping_add(attempt as u64 * 0xA24BAED4963EE407);
            let singles = gen_singles(&twist, seed, &cfg.degrees, cfg.coeff_bound);
            let table = assemble(&twist, convention, &singles)?;
            if table
                .iter()
                .all(|p| !p.is_zero() && p.min_exp() == Some(0) && p.coeff(0).is_one())
            {
                return Ok(QHierarchy {
                    twist,
                    convention,
                    table,
                    seed: cfg.seed,
                    degrees: cfg.degrees.clone(),
                    gen_attempts: attempt,
                });
            }
        }
        Err(Error::Genericity(
            "degenerate hierarchy after 16 reseeding rounds; change seed or twists".into(),
        ))
    }

    pub fn twist(&self) -> &TwistData {
        &self.twist
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn size(&self) -> usize {
        self.twist.size()
    }

    /// Stored polynomial of a subset (in the active convention).
    pub fn q(&self, set: Subset) -> &LaurentPoly {
        &self.table[set.0 as usize]
    }

    /// The opposite-convention entry point: `Q̄_I := Q_{complement(I)}`.
    pub fn complement_q(&self, set: Subset) -> &LaurentPoly {
        self.q(set.complement(self.size()))
    }

    pub fn max_degree(&self) -> i64 {
        self.table.iter().map(|p| p.degree()).max().unwrap_or(0)
    }

    /// Adds 1 to a pseudo-randomly chosen stored coefficient; returns the
    /// mutated hierarchy and a reproducible witness of the perturbation.
    pub fn with_mutation(&self, mutation_seed: u64) -> (Self, String) {
        let mut rng = SplitMix64::new(mutation_seed.wrapping_mul(0x9E3779B97F4A7C15) | 1);
        let size = self.size();
        let mask = 1 + rng.next_range((1u64 << size) - 1) as u32;
        let poly = &self.table[mask as usize];
        let top = poly.max_exp().unwrap_or(0);
        let exp = rng.next_range(top as u64 + 1) as i64;
        let bumped = &poly.clone() + &LaurentPoly::monomial(exp, Scalar::one());
        let mut table = self.table.clone();
        table[mask as usize] = bumped;
        let witness = format!(
            "mutated Q_{} coefficient of x^{exp} by +1 (seed {mutation_seed})",
            Subset(mask)
        );
        (
            QHierarchy {
                twist: self.twist.clone(),
                convention: self.convention,
                table,
                seed: self.seed,
                degrees: self.degrees.clone(),
                gen_attempts: self.gen_attempts,
            },
            witness,
        )
    }

    /// Serializes the hierarchy file: a text header followed by one record
    /// per subset. Byte-deterministic.
    pub fn save<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "baxterq-hierarchy v1")?;
        writeln!(w, "M {}", self.twist.m_bos())?;
        writeln!(w, "N {}", self.twist.n_fer())?;
        writeln!(w, "t {}", scalar::format_scalar(self.twist.t()))?;
        let zs: Vec<String> = self
            .twist
            .z_all()
            .iter()
            .map(scalar::format_scalar)
            .collect();
        writeln!(w, "z {}", zs.join(","))?;
        writeln!(w, "convention {}", self.convention.name())?;
        writeln!(w, "seed {}", self.seed)?;
        let ds: Vec<String> = self.degrees.iter().map(|d| d.to_string()).collect();
        writeln!(w, "degrees {}", ds.join(","))?;
        for (mask, poly) in self.table.iter().enumerate() {
            let terms: Vec<String> = poly
                .terms()
                .map(|(e, c)| format!("{e}:{}", scalar::format_scalar(c)))
                .collect();
            writeln!(w, "Q {mask} {}", terms.join(" "))?;
        }
        Ok(())
    }

    pub fn save_to_string(&self) -> String {
        let mut buf = Vec::new();
        self.save(&mut buf).expect("in-memory write");
        String::from_utf8(buf).expect("ascii output")
    }

    /// Parses a hierarchy file; the inverse of `save`, bit-exact.
    pub fn load<R: BufRead>(r: R) -> Result<Self> {
        let mut header: BTreeMap<String, String> = BTreeMap::new();
        let mut records: Vec<(u32, LaurentPoly)> = Vec::new();
        for (lineno, line) in r.lines().enumerate() {
            let line = line?;
            let line = line.trim_end();
            if lineno == 0 {
                if line != "baxterq-hierarchy v1" {
                    return Err(Error::Parse(format!("unrecognized header {line:?}")));
                }
                continue;
            }
            if line.is_empty() {
                continue;
            }
            let (key, rest) = line
                .split_once(' ')
                .ok_or_else(|| Error::Parse(format!("bad line {line:?}")))?;
            if key == "Q" {
                let (mask, terms) = match rest.split_once(' ') {
                    Some((m, t)) => (m, t),
                    None => (rest, ""),
                };
                let mask: u32 = mask
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad subset mask {mask:?}")))?;
                let mut pairs = Vec::new();
                for term in terms.split_whitespace() {
                    let (e, c) = term
                        .split_once(':')
                        .ok_or_else(|| Error::Parse(format!("bad term {term:?}")))?;
                    let e: i64 = e
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent {e:?}")))?;
                    pairs.push((e, scalar::parse_scalar(c)?));
                }
                records.push((mask, LaurentPoly::from_terms(pairs)));
            } else {
                header.insert(key.to_string(), rest.to_string());
            }
        }
        let get = |k: &str| {
            header
                .get(k)
                .cloned()
                .ok_or_else(|| Error::Parse(format!("missing header field {k}")))
        };
        let m_bos: usize = get("M")?
            .parse()
            .map_err(|_| Error::Parse("bad M".into()))?;
        let n_fer: usize = get("N")?
            .parse()
            .map_err(|_| Error::Parse("bad N".into()))?;
        let t = scalar::parse_scalar(&get("t")?)?;
        let z = get("z")?
            .split(',')
            .map(scalar::parse_scalar)
            .collect::<Result<Vec<_>>>()?;
        let convention = Convention::parse(&get("convention")?)?;
        let seed: u64 = get("seed")?
            .parse()
            .map_err(|_| Error::Parse("bad seed".into()))?;
        let degrees = get("degrees")?
            .split(',')
            .map(|d| {
                d.parse::<u32>()
                    .map_err(|_| Error::Parse("bad degree".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let twist = TwistData::new(m_bos, n_fer, t, z)?;
        let size = twist.size();
        let mut table = vec![LaurentPoly::zero(); 1 << size];
        let mut seen = vec![false; 1 << size];
        for (mask, poly) in records {
            if mask as usize >= table.len() {
                return Err(Error::Parse(format!("subset mask {mask} out of range")));
            }
            table[mask as usize] = poly;
            seen[mask as usize] = true;
        }
        if !seen.iter().all(|&s| s) {
            return Err(Error::Parse("incomplete hierarchy file".into()));
        }
        Ok(QHierarchy {
            twist,
            convention,
            table,
            seed,
            degrees,
            gen_attempts: 0,
        })
    }
}

/// Deterministic free singles: `Q_i(0) = 1`, configured degree, nonzero
/// leading coefficient, rationals from a bounded pool.
pub fn gen_singles(twist: &TwistData, seed: u64, degrees: &[u32], bound: u32) -> Vec<LaurentPoly> {
    let mut rng = SplitMix64::new(seed);
    let bound = bound.max(1) as u64;
    let mut out = Vec::with_capacity(twist.size());
    for &deg in degrees {
        let mut coeffs = vec![Scalar::one()];
        for j in 1..=deg {
            let mut num = rng.next_signed(bound);
            if j == deg {
                while num == 0 {
                    num = rng.next_signed(bound);
                }
            }
            let den = 1 + rng.next_range(bound) as i64;
            coeffs.push(scalar::ratio(num, den));
        }
        out.push(LaurentPoly::from_coeffs(coeffs));
    }
    out
}

/// Coefficient-wise pair solve from the boson-fermion three-term relation:
/// `a_k = (z_b - z_f) c_k / (q^k z_b - q^{-k} z_f)` with `c = Q_b Q_f`
/// (mirrored denominator for the barred convention).
pub fn solve_pair(
    twist: &TwistData,
    convention: Convention,
    b: u8,
    f: u8,
    qb: &LaurentPoly,
    qf: &LaurentPoly,
) -> Result<LaurentPoly> {
    let zb = twist.z(b);
    let zf = twist.z(f);
    let q = twist.q();
    let prod = qb * qf;
    let zdiff = zb - zf;
    let mut terms = Vec::new();
    for (e, c) in prod.terms() {
        debug_assert!(e >= 0);
        let qk = scalar::pow_i64(&q, e);
        let den = match convention {
            Convention::Unbarred => zb * &qk - zf / &qk,
            Convention::Barred => zb / &qk - zf * &qk,
        };
        if den.is_zero() {
            return Err(Error::Resonance {
                b,
                f,
                k: e as usize,
            });
        }
        terms.push((e, &zdiff * c / den));
    }
    Ok(LaurentPoly::from_terms(terms))
}

/// Builds the whole table: singles, boson-fermion pairs, then Wronskian
/// determinants for every remaining subset, level by level.
fn assemble(
    twist: &TwistData,
    convention: Convention,
    singles: &[LaurentPoly],
) -> Result<Vec<LaurentPoly>> {
    let size = twist.size();
    let mut table = vec![LaurentPoly::zero(); 1 << size];
    table[0] = LaurentPoly::one();
    for (i, q) in singles.iter().enumerate() {
        table[Subset::singleton(i as u8 + 1).0 as usize] = q.clone();
    }
    for b in twist.bosons() {
        for f in twist.fermions() {
            let set = Subset::from_indices(&[b, f]);
            let qb = &table[Subset::singleton(b).0 as usize];
            let qf = &table[Subset::singleton(f).0 as usize];
            table[set.0 as usize] = solve_pair(twist, convention, b, f, qb, qf)?;
        }
    }
    let mut by_level: Vec<Vec<Subset>> = vec![Vec::new(); size + 1];
    for set in Subset::all(size) {
        by_level[set.card()].push(set);
    }
    for level in 2..=size {
        for &set in &by_level[level] {
            if !table[set.0 as usize].is_zero() {
                continue; // boson-fermion pairs are already solved
            }
            let view = BuildView {
                twist,
                table: &table,
            };
            let bosons: Vec<u8> = set
                .indices()
                .into_iter()
                .filter(|&i| twist.is_boson(i))
                .collect();
            let fermions: Vec<u8> = set
                .indices()
                .into_iter()
                .filter(|&i| !twist.is_boson(i))
                .collect();
            table[set.0 as usize] =
                wronskian::wronskian_q(&view, convention.is_barred(), &bosons, &fermions);
        }
    }
    Ok(table)
}

struct BuildView<'a> {
    twist: &'a TwistData,
    table: &'a [LaurentPoly],
}

impl wronskian::QTable for BuildView<'_> {
    fn twist(&self) -> &TwistData {
        self.twist
    }

    fn poly(&self, set: Subset) -> &LaurentPoly {
        &self.table[set.0 as usize]
    }
}
