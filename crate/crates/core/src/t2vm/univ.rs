//! Universal application: executing machine indices.
//!
//! A function-space name has the shape `0^n 1 p` where `n` is a machine
//! index and `p` the oracle stream handed to that machine. Odd indices
//! decode to interpreted programs. Even indices dispatch into a host-level
//! table: the first eight entries are the fixed combinator builtins, the
//! rest are realizers registered at runtime (searches, arithmetic on reals,
//! anything a 9-instruction register machine would be miserable at). The
//! builtins read their parameters from the oracle stream through the pair
//! codec.

use std::sync::{Arc, Mutex, OnceLock, RwLock};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use super::interp::machine_output;
use super::isa::{program_of_odd_index, MachineIndex, Program};
use crate::fuel::{FuelMeter, Interrupt, Observation};
use crate::names::{pair, unpair, Name, NameFn};

/// The fixed combinator table bound to even machine indices `2k`, `k < 8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Builtin {
    Eval,
    Compose,
    Product,
    CurryStep,
    Uncurry,
    ConstFn,
    Partial,
    Diagonal,
}

impl Builtin {
    pub const TABLE: [Builtin; 8] = [
        Builtin::Eval,
        Builtin::Compose,
        Builtin::Product,
        Builtin::CurryStep,
        Builtin::Uncurry,
        Builtin::ConstFn,
        Builtin::Partial,
        Builtin::Diagonal,
    ];

    fn table_position(self) -> u64 {
        Builtin::TABLE
            .iter()
            .position(|b| *b == self)
            .expect("builtin present in table") as u64
    }

    /// The machine index `2k` binding this builtin.
    pub fn machine_index(self) -> BigUint {
        BigUint::from(2 * self.table_position())
    }
}

impl MachineIndex {
    pub fn builtin(b: Builtin) -> Self {
        MachineIndex(b.machine_index())
    }

    pub fn host(slot: HostSlot) -> Self {
        MachineIndex(BigUint::from(2 * (8 + slot.0 as u64)))
    }
}

/// A host-level realizer occupying an even machine index `2(8 + slot)`.
pub trait HostRealizer: Send + Sync {
    /// Assemble the output name for the given streams. Must be cheap and
    /// must not consume fuel; all observable work happens lazily inside the
    /// returned name.
    fn apply(&self, oracle: &Name, input: &Name) -> Name;

    fn label(&self) -> &'static str {
        "host"
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HostSlot(usize);

static HOST_TABLE: OnceLock<RwLock<Vec<Arc<dyn HostRealizer>>>> = OnceLock::new();

fn host_table() -> &'static RwLock<Vec<Arc<dyn HostRealizer>>> {
    HOST_TABLE.get_or_init(|| RwLock::new(Vec::new()))
}

/// Register a realizer, yielding a process-stable machine index.
pub fn register_host(realizer: Arc<dyn HostRealizer>) -> HostSlot {
    let mut table = host_table().write().unwrap();
    table.push(realizer);
    HostSlot(table.len() - 1)
}

fn host_lookup(slot: u64) -> Option<Arc<dyn HostRealizer>> {
    let table = host_table().read().unwrap();
    slot.to_usize().and_then(|s| table.get(s).cloned())
}

struct DivergentName;

impl NameFn for DivergentName {
    fn bit(&self, _idx: u64, meter: &mut FuelMeter) -> Observation<bool> {
        // Nothing will ever be written; drain the caller's budget so loops
        // polling this name terminate.
        let rest = meter.remaining();
        let _ = meter.charge(rest);
        Err(Interrupt::FuelExhausted)
    }

    fn label(&self) -> &'static str {
        "divergent"
    }
}

/// A name that never produces a bit.
pub fn divergent_name() -> Name {
    Name::custom(Arc::new(DivergentName))
}

/// Run machine `index` with the given oracle on `input`, as a lazy name.
pub fn run_machine(index: &BigUint, oracle: Name, input: Name) -> Name {
    if index.is_odd() {
        let k = (index - BigUint::one()) / BigUint::from(2u32);
        let program = Arc::new(program_of_odd_index(&k));
        return machine_output(program, oracle, input);
    }
    let k = index / BigUint::from(2u32);
    match k.to_u64() {
        Some(k) if k < 8 => builtin_output(Builtin::TABLE[k as usize], oracle, input),
        Some(k) => match host_lookup(k - 8) {
            Some(realizer) => realizer.apply(&oracle, &input),
            None => divergent_name(),
        },
        None => divergent_name(),
    }
}

fn builtin_output(builtin: Builtin, oracle: Name, input: Name) -> Name {
    match builtin {
        Builtin::Eval => {
            let (f, x) = unpair(&input);
            apply_name(&f, &x)
        }
        Builtin::Compose => {
            let (f, g) = unpair(&oracle);
            apply_name(&f, &apply_name(&g, &input))
        }
        Builtin::Product => {
            let (f, g) = unpair(&oracle);
            let (a, b) = unpair(&input);
            pair(apply_name(&f, &a), apply_name(&g, &b))
        }
        Builtin::CurryStep => {
            // curry(f) applied to x yields the partial-application name
            // `0^PARTIAL 1 <f, x>`, itself a function name.
            Name::padded(
                Builtin::Partial.machine_index(),
                pair(oracle, input),
            )
        }
        Builtin::Uncurry => {
            let (a, b) = unpair(&input);
            apply_name(&apply_name(&oracle, &a), &b)
        }
        Builtin::ConstFn => oracle,
        Builtin::Partial => {
            let (f, a) = unpair(&oracle);
            apply_name(&f, &pair(a, input))
        }
        Builtin::Diagonal => pair(input.clone(), input),
    }
}

/// Build the function-space name `0^n 1 oracle`.
pub fn function_name(index: &MachineIndex, oracle: Name) -> Name {
    Name::padded(index.0.clone(), oracle)
}

enum ResolveState {
    Scanning { pos: u64 },
    Done(Name),
}

/// Application of a function name to an argument, resolved lazily: the
/// `0^n 1` prefix is parsed on first query (structurally when the name is
/// block-shaped, by a resumable bit scan otherwise), then all queries go to
/// the dispatched machine output.
struct ApplyName {
    fname: Name,
    arg: Name,
    state: Mutex<ResolveState>,
}

impl ApplyName {
    fn resolve(&self, meter: &mut FuelMeter) -> Observation<Name> {
        let mut state = self.state.lock().unwrap();
        if let ResolveState::Done(name) = &*state {
            return Ok(name.clone());
        }
        if let Some((index, tail)) = self.fname.split_block(meter)? {
            let out = run_machine(&index, tail, self.arg.clone());
            *state = ResolveState::Done(out.clone());
            return Ok(out);
        }
        let ResolveState::Scanning { pos } = &mut *state else {
            unreachable!()
        };
        loop {
            if self.fname.bit_metered(*pos, meter)? {
                let index = BigUint::from(*pos);
                let tail = self.fname.suffix(*pos + 1);
                let out = run_machine(&index, tail, self.arg.clone());
                *state = ResolveState::Done(out.clone());
                return Ok(out);
            }
            *pos = pos.checked_add(1).ok_or(Interrupt::FuelExhausted)?;
        }
    }
}

impl NameFn for ApplyName {
    fn bit(&self, idx: u64, meter: &mut FuelMeter) -> Observation<bool> {
        let inner = self.resolve(meter)?;
        inner.bit_metered(idx, meter)
    }

    fn split_block(&self, meter: &mut FuelMeter) -> Observation<Option<(BigUint, Name)>> {
        let inner = self.resolve(meter)?;
        inner.split_block(meter)
    }

    fn label(&self) -> &'static str {
        "apply"
    }
}

/// Universal application: parse `fname` as `0^n 1 p` and run machine `n`
/// with oracle `p` on `arg`. Everything is lazy; parse effort is charged to
/// the first bit query.
pub fn apply_name(fname: &Name, arg: &Name) -> Name {
    Name::custom(Arc::new(ApplyName {
        fname: fname.clone(),
        arg: arg.clone(),
        state: Mutex::new(ResolveState::Scanning { pos: 0 }),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::t2vm::asm::assemble;

    const FUEL: u64 = 100_000;

    fn identity_fn_name() -> Name {
        let p = assemble("const r2 1\nloop: readinput r0 r1\nwrite r0\nadd r1 r2\njmp loop\n")
            .unwrap();
        function_name(&MachineIndex::of_program(&p), Name::zeros())
    }

    #[test]
    fn apply_identity() {
        let f = identity_fn_name();
        let x = Name::ultimately_periodic(vec![true, true, false], vec![false, true]);
        let out = apply_name(&f, &x);
        assert_eq!(out.prefix(10, FUEL), x.prefix(10, FUEL));
    }

    #[test]
    fn constfn_copies_oracle() {
        let y = Name::periodic(vec![true, false, false]);
        let f = function_name(&MachineIndex::builtin(Builtin::ConstFn), y.clone());
        let out = apply_name(&f, &Name::ones());
        assert_eq!(out.prefix(9, FUEL), y.prefix(9, FUEL));
    }

    #[test]
    fn eval_builtin_applies_packed_function() {
        let f = identity_fn_name();
        let x = Name::periodic(vec![false, true]);
        let ev = function_name(&MachineIndex::builtin(Builtin::Eval), Name::zeros());
        let out = apply_name(&ev, &pair(f.clone(), x.clone()));
        let direct = apply_name(&f, &x);
        assert_eq!(out.prefix(12, FUEL), direct.prefix(12, FUEL));
    }

    #[test]
    fn unregistered_host_slot_diverges() {
        let idx = BigUint::from(2 * (8 + 999_999u64));
        let out = run_machine(&idx, Name::zeros(), Name::zeros());
        assert_eq!(out.bit(0, 1_000), Err(Interrupt::FuelExhausted));
    }

    #[test]
    fn scanned_parse_matches_structural() {
        // A function name materialized as literal bits: 0^10 1 (CONSTFN) ++ oracle.
        let y = Name::periodic(vec![true]);
        let structural = function_name(&MachineIndex::builtin(Builtin::ConstFn), y.clone());
        let mut bits = vec![false; 10];
        bits.push(true);
        let literal = Name::prefixed(bits, y);
        let a = apply_name(&structural, &Name::zeros());
        let b = apply_name(&literal, &Name::zeros());
        assert_eq!(a.prefix(8, FUEL), b.prefix(8, FUEL));
    }
}
