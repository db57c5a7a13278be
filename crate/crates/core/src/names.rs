//! Infinite binary sequences with on-demand evaluation.
//!
//! A [`Name`] is an element of Cantor space observed through fuel-bounded
//! bit queries. Names are immutable after construction and cheap to clone;
//! stateful sources (machine runs, searches) synchronize internally so a
//! name can be shared across threads and its materialized prefix only ever
//! grows.
//!
//! The module also owns the two pairing codecs everything else relies on:
//! strict interleaving for binary pairs and the Cantor pairing polynomial
//! for countable tuples, plus the unary-block view `0^{k0} 1 0^{k1} 1 ...`
//! used to ride sequences of naturals over Cantor space.

use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::fuel::{FuelMeter, Interrupt, Observation};

/// A stateful bit supplier backing a [`Name`]. Implementations must be
/// deterministic: the bit at an index never depends on the order or budget
/// of earlier queries.
pub trait NameFn: Send + Sync {
    fn bit(&self, idx: u64, meter: &mut FuelMeter) -> Observation<bool>;

    /// Structural view of `0^k 1 rest` when this source can produce it
    /// without scanning its own bits. Lets `0^n 1 p` prefixes survive
    /// through lazy application nodes, where `n` is far too large to scan.
    fn split_block(&self, _meter: &mut FuelMeter) -> Observation<Option<(BigUint, Name)>> {
        Ok(None)
    }

    /// Label used by `Debug` output.
    fn label(&self) -> &'static str {
        "custom"
    }
}

/// Lazy generator for a chain of unary blocks. `block(m)` is the m-th
/// natural of the encoded sequence.
pub trait BlockGen: Send + Sync {
    fn block(&self, m: u64, meter: &mut FuelMeter) -> Observation<BigUint>;

    fn label(&self) -> &'static str {
        "blocks"
    }
}

enum Source {
    /// Finite word, then zeros forever.
    Word(Vec<bool>),
    /// Finite prefix, then a period repeated forever.
    Periodic { prefix: Vec<bool>, period: Vec<bool> },
    /// `0^zeros 1 tail` — the shape of natural-number and machine-index
    /// prefixes. `zeros` may be astronomically large; queries compare
    /// against it without materializing anything.
    Padded { zeros: BigUint, tail: Name },
    /// Finite literal prefix glued onto another name.
    Prefix { bits: Vec<bool>, tail: Name },
    /// `of` with the first `drop` bits removed.
    Tail { of: Name, drop: u64 },
    /// Strict interleaving: bit 2n from `even`, bit 2n+1 from `odd`.
    Interleave { even: Name, odd: Name },
    /// One side of an interleaved pair.
    Parity { of: Name, odd: bool },
    /// Countable tupling along the Cantor pairing polynomial.
    TupleSeq(Arc<TupleComponents>),
    /// Row `index` of a tupled name.
    TupleProject { of: Name, index: u64 },
    /// Chain of unary blocks produced on demand, starting at block `skip`.
    Blocks { gen: Arc<dyn BlockGen>, skip: u64 },
    /// Finite word that rejects queries past its end. Search carrier only.
    PartialWord(Vec<bool>),
    /// Finite block chain that rejects queries past its last block.
    PartialBlocks(Vec<BigUint>),
    /// Anything stateful: machine output buffers, dovetailed searches.
    Custom(Arc<dyn NameFn>),
}

struct TupleComponents {
    supplier: Box<dyn Fn(u64) -> Name + Send + Sync>,
    memo: Mutex<Vec<Option<Name>>>,
}

impl TupleComponents {
    fn component(&self, i: u64) -> Name {
        let idx = i as usize;
        let mut memo = self.memo.lock().unwrap();
        if memo.len() <= idx {
            memo.resize(idx + 1, None);
        }
        memo[idx]
            .get_or_insert_with(|| (self.supplier)(i))
            .clone()
    }
}

/// An infinite binary sequence evaluated on demand.
#[derive(Clone)]
pub struct Name(Arc<Source>);

impl fmt::Debug for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = match &*self.0 {
            Source::Word(w) => return write!(f, "Name(word {:?} then zeros)", bits_string(w)),
            Source::Periodic { prefix, period } => {
                return write!(
                    f,
                    "Name(word {:?} periodic {:?})",
                    bits_string(prefix),
                    bits_string(period)
                )
            }
            Source::Padded { zeros, .. } => return write!(f, "Name(0^{} 1 ...)", zeros),
            Source::Prefix { .. } => "prefix",
            Source::Tail { .. } => "tail",
            Source::Interleave { .. } => "interleave",
            Source::Parity { .. } => "parity",
            Source::TupleSeq(_) => "tuple-seq",
            Source::TupleProject { .. } => "tuple-project",
            Source::Blocks { .. } => "blocks",
            Source::PartialWord(_) => "partial-word",
            Source::PartialBlocks(_) => "partial-blocks",
            Source::Custom(c) => c.label(),
        };
        write!(f, "Name({label})")
    }
}

fn bits_string(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

impl Name {
    fn from_source(src: Source) -> Self {
        Name(Arc::new(src))
    }

    /// `0^ω`.
    pub fn zeros() -> Self {
        Name::from_source(Source::Word(Vec::new()))
    }

    /// `1^ω`.
    pub fn ones() -> Self {
        Name::periodic(vec![true])
    }

    /// A finite word followed by zeros (an eventually-zero name).
    pub fn word(bits: Vec<bool>) -> Self {
        Name::from_source(Source::Word(bits))
    }

    /// A purely periodic name.
    pub fn periodic(period: Vec<bool>) -> Self {
        assert!(!period.is_empty(), "period must be non-empty");
        Name::from_source(Source::Periodic {
            prefix: Vec::new(),
            period,
        })
    }

    /// An ultimately periodic name: `prefix` then `period` forever.
    pub fn ultimately_periodic(prefix: Vec<bool>, period: Vec<bool>) -> Self {
        assert!(!period.is_empty(), "period must be non-empty");
        Name::from_source(Source::Periodic { prefix, period })
    }

    /// `0^zeros 1 tail`.
    pub fn padded(zeros: BigUint, tail: Name) -> Self {
        Name::from_source(Source::Padded { zeros, tail })
    }

    /// The δ_ℕ name of `n`: `0^n 1 0^ω`.
    pub fn nat(n: u64) -> Self {
        Name::padded(BigUint::from(n), Name::zeros())
    }

    /// A literal prefix glued onto `tail`.
    pub fn prefixed(bits: Vec<bool>, tail: Name) -> Self {
        if bits.is_empty() {
            tail
        } else {
            Name::from_source(Source::Prefix { bits, tail })
        }
    }

    /// The name with the first `drop` bits removed.
    pub fn suffix(&self, drop: u64) -> Self {
        if drop == 0 {
            return self.clone();
        }
        Name::from_source(Source::Tail {
            of: self.clone(),
            drop,
        })
    }

    /// A name backed by a custom bit supplier.
    pub fn custom(f: Arc<dyn NameFn>) -> Self {
        Name::from_source(Source::Custom(f))
    }

    /// A chain of unary blocks produced by `gen`.
    pub fn blocks(gen: Arc<dyn BlockGen>) -> Self {
        Name::from_source(Source::Blocks { gen, skip: 0 })
    }

    /// Finite word that answers [`Interrupt::BeyondPrefix`] past its end.
    pub fn partial_word(bits: Vec<bool>) -> Self {
        Name::from_source(Source::PartialWord(bits))
    }

    /// Finite block chain that answers [`Interrupt::BeyondPrefix`] past its
    /// last block.
    pub fn partial_blocks(blocks: Vec<BigUint>) -> Self {
        Name::from_source(Source::PartialBlocks(blocks))
    }

    /// Two names share their backing object.
    pub fn same_object(&self, other: &Name) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    /// Query one bit under a fresh budget.
    pub fn bit(&self, idx: u64, fuel: u64) -> Observation<bool> {
        let mut meter = FuelMeter::new(fuel);
        self.bit_metered(idx, &mut meter)
    }

    /// Query one bit, charging an existing meter.
    pub fn bit_metered(&self, idx: u64, meter: &mut FuelMeter) -> Observation<bool> {
        meter.charge(1)?;
        match &*self.0 {
            Source::Word(bits) => Ok(bits.get(idx as usize).copied().unwrap_or(false)),
            Source::Periodic { prefix, period } => {
                let i = idx as usize;
                if i < prefix.len() {
                    Ok(prefix[i])
                } else {
                    Ok(period[(i - prefix.len()) % period.len()])
                }
            }
            Source::Padded { zeros, tail } => {
                let idx_big = BigUint::from(idx);
                if idx_big < *zeros {
                    Ok(false)
                } else if idx_big == *zeros {
                    Ok(true)
                } else {
                    // Index arithmetic stays in u64: past the marker bit the
                    // offset into the tail is idx - zeros - 1, which only
                    // happens when zeros itself fits in u64.
                    let z = zeros
                        .to_u64()
                        .expect("padded index beyond marker implies small block");
                    tail.bit_metered(idx - z - 1, meter)
                }
            }
            Source::Prefix { bits, tail } => {
                let i = idx as usize;
                if i < bits.len() {
                    Ok(bits[i])
                } else {
                    tail.bit_metered(idx - bits.len() as u64, meter)
                }
            }
            Source::Tail { of, drop } => of.bit_metered(idx + drop, meter),
            Source::Interleave { even, odd } => {
                if idx % 2 == 0 {
                    even.bit_metered(idx / 2, meter)
                } else {
                    odd.bit_metered(idx / 2, meter)
                }
            }
            Source::Parity { of, odd } => {
                let pos = idx
                    .checked_mul(2)
                    .and_then(|p| p.checked_add(u64::from(*odd)))
                    .ok_or(Interrupt::FuelExhausted)?;
                of.bit_metered(pos, meter)
            }
            Source::TupleSeq(components) => {
                let (i, j) = cantor_unpair(idx);
                components.component(i).bit_metered(j, meter)
            }
            Source::TupleProject { of, index } => {
                let pos = cantor_pair_checked(*index, idx).ok_or(Interrupt::FuelExhausted)?;
                of.bit_metered(pos, meter)
            }
            Source::Blocks { gen, skip } => {
                // Walk blocks until the one covering idx.
                let target = BigUint::from(idx);
                let mut pos = BigUint::zero();
                let mut m = *skip;
                loop {
                    meter.charge(1)?;
                    let k = gen.block(m, meter)?;
                    // Block occupies [pos, pos + k]; the marker 1 sits at pos + k.
                    let end = &pos + &k;
                    if target < end {
                        return Ok(false);
                    }
                    if target == end {
                        return Ok(true);
                    }
                    pos = end + BigUint::one();
                    m += 1;
                }
            }
            Source::PartialWord(bits) => bits
                .get(idx as usize)
                .copied()
                .ok_or(Interrupt::BeyondPrefix),
            Source::PartialBlocks(blocks) => {
                let target = BigUint::from(idx);
                let mut pos = BigUint::zero();
                for k in blocks {
                    let end = &pos + k;
                    if target < end {
                        return Ok(false);
                    }
                    if target == end {
                        return Ok(true);
                    }
                    pos = end + BigUint::one();
                }
                Err(Interrupt::BeyondPrefix)
            }
            Source::Custom(f) => f.bit(idx, meter),
        }
    }

    /// Materialize the first `len` bits, all or nothing.
    pub fn prefix(&self, len: u64, fuel: u64) -> Observation<Vec<bool>> {
        let mut meter = FuelMeter::new(fuel);
        self.prefix_metered(len, &mut meter)
    }

    pub fn prefix_metered(&self, len: u64, meter: &mut FuelMeter) -> Observation<Vec<bool>> {
        let mut out = Vec::with_capacity(len as usize);
        for i in 0..len {
            out.push(self.bit_metered(i, meter)?);
        }
        Ok(out)
    }

    /// Structural view of `0^k 1 rest`, when available without scanning.
    /// Returns `Ok(None)` if the name has no block-shaped fast path.
    pub fn split_block(&self, meter: &mut FuelMeter) -> Observation<Option<(BigUint, Name)>> {
        match &*self.0 {
            Source::Padded { zeros, tail } => Ok(Some((zeros.clone(), tail.clone()))),
            Source::Blocks { gen, skip } => {
                let k = gen.block(*skip, meter)?;
                let rest = Name::from_source(Source::Blocks {
                    gen: gen.clone(),
                    skip: *skip + 1,
                });
                Ok(Some((k, rest)))
            }
            Source::PartialBlocks(blocks) => match blocks.split_first() {
                Some((k, rest)) => Ok(Some((k.clone(), Name::partial_blocks(rest.to_vec())))),
                None => Err(Interrupt::BeyondPrefix),
            },
            Source::Custom(f) => f.split_block(meter),
            _ => Ok(None),
        }
    }

    /// Read the m-th unary block `0^k 1` of this name as the natural `k`.
    /// Structural sources answer directly; anything else is scanned bit by
    /// bit under the meter.
    pub fn read_block(&self, m: u64, meter: &mut FuelMeter) -> Observation<BigUint> {
        match &*self.0 {
            Source::Blocks { gen, skip } => {
                meter.charge(1)?;
                gen.block(skip + m, meter)
            }
            Source::PartialBlocks(blocks) => {
                meter.charge(1)?;
                blocks
                    .get(m as usize)
                    .cloned()
                    .ok_or(Interrupt::BeyondPrefix)
            }
            Source::Padded { zeros, tail } => {
                meter.charge(1)?;
                if m == 0 {
                    Ok(zeros.clone())
                } else {
                    tail.read_block(m - 1, meter)
                }
            }
            _ => {
                // Generic scan: skip m blocks, then count zeros to the next 1.
                let mut pos = 0u64;
                let mut skipped = 0u64;
                let mut zeros = 0u64;
                loop {
                    if self.bit_metered(pos, meter)? {
                        if skipped == m {
                            return Ok(BigUint::from(zeros));
                        }
                        skipped += 1;
                        zeros = 0;
                    } else if skipped == m {
                        zeros += 1;
                    }
                    pos = pos.checked_add(1).ok_or(Interrupt::FuelExhausted)?;
                }
            }
        }
    }
}

/// Strict interleaving: `pair(p, q)(2n) = p(n)`, `pair(p, q)(2n+1) = q(n)`.
pub fn pair(p: Name, q: Name) -> Name {
    Name::from_source(Source::Interleave { even: p, odd: q })
}

/// Inverse of [`pair`], componentwise. When the argument was built by
/// [`pair`] the original components are returned directly.
pub fn unpair(r: &Name) -> (Name, Name) {
    if let Source::Interleave { even, odd } = &*r.0 {
        return (even.clone(), odd.clone());
    }
    (
        Name::from_source(Source::Parity {
            of: r.clone(),
            odd: false,
        }),
        Name::from_source(Source::Parity {
            of: r.clone(),
            odd: true,
        }),
    )
}

/// Countable tupling: `tuple_seq(s)(cantor_pair(i, j)) = s(i)(j)`.
/// The supplier is memoized so every row is represented by one shared name.
pub fn tuple_seq(supplier: impl Fn(u64) -> Name + Send + Sync + 'static) -> Name {
    Name::from_source(Source::TupleSeq(Arc::new(TupleComponents {
        supplier: Box::new(supplier),
        memo: Mutex::new(Vec::new()),
    })))
}

/// Row `i` of a tupled name.
pub fn project_seq(r: &Name, i: u64) -> Name {
    if let Source::TupleSeq(components) = &*r.0 {
        return components.component(i);
    }
    Name::from_source(Source::TupleProject {
        of: r.clone(),
        index: i,
    })
}

/// The Cantor pairing polynomial `(i+j)(i+j+1)/2 + j`.
pub fn cantor_pair(i: u64, j: u64) -> u64 {
    cantor_pair_checked(i, j).expect("cantor_pair overflow")
}

fn cantor_pair_checked(i: u64, j: u64) -> Option<u64> {
    let s = (i as u128) + (j as u128);
    let v = s * (s + 1) / 2 + (j as u128);
    u64::try_from(v).ok()
}

/// Inverse of [`cantor_pair`].
pub fn cantor_unpair(z: u64) -> (u64, u64) {
    let z = z as u128;
    let w = ((((8 * z + 1) as f64).sqrt() as u128).saturating_sub(1)) / 2;
    // Float sqrt can land one off for large z; correct locally.
    let mut w = w;
    while w * (w + 1) / 2 > z {
        w -= 1;
    }
    while (w + 1) * (w + 2) / 2 <= z {
        w += 1;
    }
    let t = w * (w + 1) / 2;
    let j = z - t;
    let i = w - j;
    (i as u64, j as u64)
}

/// Cantor pairing on arbitrary naturals.
pub fn big_pair(i: &BigUint, j: &BigUint) -> BigUint {
    let s = i + j;
    (&s * (&s + BigUint::one())) / BigUint::from(2u32) + j
}

/// Inverse of [`big_pair`].
pub fn big_unpair(z: &BigUint) -> (BigUint, BigUint) {
    let eight_z = z * BigUint::from(8u32) + BigUint::one();
    let mut w = (eight_z.sqrt() - BigUint::one()) / BigUint::from(2u32);
    let tri = |w: &BigUint| (w * (w + BigUint::one())) / BigUint::from(2u32);
    while tri(&w) > *z {
        w -= BigUint::one();
    }
    while tri(&(&w + BigUint::one())) <= *z {
        w += BigUint::one();
    }
    let j = z - tri(&w);
    let i = &w - &j;
    (i, j)
}

/// `⟨a, b, c⟩ = pair(pair(a, b), c)`.
pub fn big_triple(a: &BigUint, b: &BigUint, c: &BigUint) -> BigUint {
    big_pair(&big_pair(a, b), c)
}

/// Inverse of [`big_triple`].
pub fn big_untriple(z: &BigUint) -> (BigUint, BigUint, BigUint) {
    let (ab, c) = big_unpair(z);
    let (a, b) = big_unpair(&ab);
    (a, b, c)
}

/// A finite observation request: `len` bits of `name` under `fuel`.
#[derive(Clone, Debug)]
pub struct PrefixQuery {
    pub name: Name,
    pub len: u64,
    pub fuel: u64,
}

impl PrefixQuery {
    pub fn run(&self) -> Observation<Vec<bool>> {
        self.name.prefix(self.len, self.fuel)
    }
}

/// Parse the literal syntax used by the CLI and tests:
/// `word "0110" then zeros`, `periodic "10"`, `nat 5`.
pub fn parse_literal(input: &str) -> Result<Name, LiteralError> {
    let tokens: Vec<&str> = input.split_whitespace().collect();
    match tokens.as_slice() {
        ["word", w] | ["word", w, "then", "zeros"] => Ok(Name::word(parse_bits(w)?)),
        ["periodic", w] => Ok(Name::periodic(parse_bits_nonempty(w)?)),
        ["word", w, "then", "periodic", p] => Ok(Name::ultimately_periodic(
            parse_bits(w)?,
            parse_bits_nonempty(p)?,
        )),
        ["nat", n] => {
            let n: u64 = n
                .parse()
                .map_err(|_| LiteralError::BadNumber(n.to_string()))?;
            Ok(Name::nat(n))
        }
        ["zeros"] => Ok(Name::zeros()),
        ["ones"] => Ok(Name::ones()),
        _ => Err(LiteralError::BadForm(input.to_string())),
    }
}

fn parse_bits(raw: &str) -> Result<Vec<bool>, LiteralError> {
    let w = raw.trim_matches('"');
    w.chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(LiteralError::BadBit(c)),
        })
        .collect()
}

fn parse_bits_nonempty(raw: &str) -> Result<Vec<bool>, LiteralError> {
    let bits = parse_bits(raw)?;
    if bits.is_empty() {
        return Err(LiteralError::BadForm(raw.to_string()));
    }
    Ok(bits)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LiteralError {
    #[error("unrecognized name literal: {0}")]
    BadForm(String),
    #[error("name words may only contain 0 and 1, found {0:?}")]
    BadBit(char),
    #[error("bad number in literal: {0}")]
    BadNumber(String),
}

#[cfg(test)]
mod tests {
    use super::*;

    const FUEL: u64 = 10_000;

    fn bits(name: &Name, len: u64) -> Vec<bool> {
        name.prefix(len, FUEL).unwrap()
    }

    #[test]
    fn constant_zero_stream() {
        assert_eq!(Name::zeros().bit(7, FUEL), Ok(false));
    }

    #[test]
    fn period_two_stream() {
        let p = Name::periodic(vec![true, false]);
        assert_eq!(p.bit(5, FUEL), Ok(false));
        assert_eq!(p.bit(4, FUEL), Ok(true));
    }

    #[test]
    fn pair_interleaves() {
        let r = pair(Name::zeros(), Name::ones());
        assert_eq!(bits(&r, 8), vec![false, true, false, true, false, true, false, true]);
    }

    #[test]
    fn unpair_inverts_pair() {
        let r = Name::periodic(vec![false, true]);
        let (p, q) = unpair(&r);
        assert_eq!(bits(&p, 6), vec![false; 6]);
        assert_eq!(bits(&q, 6), vec![true; 6]);
    }

    #[test]
    fn pair_bit_13_is_q_bit_6() {
        let q = Name::word(vec![false, false, false, false, false, false, true]);
        let r = pair(Name::zeros(), q.clone());
        assert_eq!(r.bit(13, FUEL), q.bit(6, FUEL));
        assert_eq!(r.bit(13, FUEL), Ok(true));
    }

    #[test]
    fn tuple_of_zero_rows_is_zero() {
        let t = tuple_seq(|_| Name::zeros());
        assert_eq!(bits(&t, 32), vec![false; 32]);
    }

    #[test]
    fn tuple_row_zero_shows_at_pair_positions() {
        let t = tuple_seq(|i| if i == 0 { Name::ones() } else { Name::zeros() });
        assert_eq!(cantor_pair(0, 4), 14);
        assert_eq!(t.bit(14, FUEL), Ok(true));
        assert_eq!(t.bit(13, FUEL), Ok(false));
    }

    #[test]
    fn project_round_trips() {
        let t = tuple_seq(|i| if i == 2 { Name::periodic(vec![true, false]) } else { Name::zeros() });
        let row = project_seq(&t, 2);
        assert_eq!(bits(&row, 8), bits(&Name::periodic(vec![true, false]), 8));
    }

    #[test]
    fn cantor_unpair_round_trip() {
        for z in 0..5_000u64 {
            let (i, j) = cantor_unpair(z);
            assert_eq!(cantor_pair(i, j), z);
        }
    }

    #[test]
    fn big_pair_round_trip() {
        let a = BigUint::from(123456789u64);
        let b = BigUint::parse_bytes(b"987654321987654321", 10).unwrap();
        let z = big_pair(&a, &b);
        assert_eq!(big_unpair(&z), (a, b));
    }

    #[test]
    fn padded_marks_the_block() {
        let n = Name::nat(5);
        assert_eq!(bits(&n, 8), vec![false, false, false, false, false, true, false, false]);
    }

    #[test]
    fn read_block_scans_generic_names() {
        // 0^2 1 0^0 1 0^3 1 ...
        let n = Name::word(vec![false, false, true, true, false, false, false, true]);
        let mut m = FuelMeter::new(FUEL);
        assert_eq!(n.read_block(0, &mut m), Ok(BigUint::from(2u32)));
        assert_eq!(n.read_block(1, &mut m), Ok(BigUint::from(0u32)));
        assert_eq!(n.read_block(2, &mut m), Ok(BigUint::from(3u32)));
    }

    #[test]
    fn partial_word_rejects_beyond() {
        let p = Name::partial_word(vec![true, false]);
        assert_eq!(p.bit(1, FUEL), Ok(false));
        assert_eq!(p.bit(2, FUEL), Err(Interrupt::BeyondPrefix));
    }

    #[test]
    fn fuel_exhaustion_is_reported() {
        let p = Name::periodic(vec![true]);
        assert_eq!(p.bit(0, 0), Err(Interrupt::FuelExhausted));
    }

    #[test]
    fn literal_forms() {
        let w = parse_literal(r#"word "0110" then zeros"#).unwrap();
        assert_eq!(bits(&w, 6), vec![false, true, true, false, false, false]);
        let p = parse_literal(r#"periodic "10""#).unwrap();
        assert_eq!(bits(&p, 4), vec![true, false, true, false]);
        let n = parse_literal("nat 5").unwrap();
        assert_eq!(n.bit(5, FUEL), Ok(true));
        assert!(parse_literal("garble").is_err());
    }
}
