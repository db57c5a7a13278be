//! Instruction set and the bit-level program codec.
//!
//! Programs must survive a round trip through a finite bit string, and every
//! bit string must decode to *some* program: the codec writes each field as
//! a unary block `0^k 1` and reduces opcode and register fields modulo their
//! ranges on the way back in, so there are no invalid encodings. A trailing
//! partial instruction is dropped.

use num_bigint::BigUint;
use num_traits::Zero;

/// Number of registers. Registers hold unbounded non-negative integers.
pub const REG_COUNT: usize = 16;

/// Number of opcodes in the instruction set.
const OPCODE_COUNT: u64 = 9;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instruction {
    /// `dst := value`
    Const { dst: u8, value: u64 },
    /// `dst := src`
    Move { dst: u8, src: u8 },
    /// `dst := dst + src`
    Add { dst: u8, src: u8 },
    /// `dst := max(dst - src, 0)`
    SubSat { dst: u8, src: u8 },
    /// Jump to the absolute instruction index `target` if `reg` is zero.
    Jz { reg: u8, target: u64 },
    /// Unconditional jump to the absolute instruction index `target`.
    Jmp { target: u64 },
    /// `dst := oracle[reg[pos]]`
    ReadOracle { dst: u8, pos: u8 },
    /// `dst := input[reg[pos]]`
    ReadInput { dst: u8, pos: u8 },
    /// Emit `reg mod 2` on the output tape.
    Write { reg: u8 },
}

/// A finite instruction list. Execution starts at index 0; running off the
/// end (or jumping past it) silently diverges: no further output, ever.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Program {
    pub instructions: Vec<Instruction>,
}

impl Program {
    pub fn new(instructions: Vec<Instruction>) -> Self {
        Program { instructions }
    }

    pub fn len(&self) -> usize {
        self.instructions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.instructions.is_empty()
    }
}

fn push_block(bits: &mut Vec<bool>, k: u64) {
    bits.extend(std::iter::repeat(false).take(k as usize));
    bits.push(true);
}

/// Serialize a program to its bit string.
pub fn encode(program: &Program) -> Vec<bool> {
    let mut bits = Vec::new();
    for ins in &program.instructions {
        match *ins {
            Instruction::Const { dst, value } => {
                push_block(&mut bits, 0);
                push_block(&mut bits, dst as u64);
                push_block(&mut bits, value);
            }
            Instruction::Move { dst, src } => {
                push_block(&mut bits, 1);
                push_block(&mut bits, dst as u64);
                push_block(&mut bits, src as u64);
            }
            Instruction::Add { dst, src } => {
                push_block(&mut bits, 2);
                push_block(&mut bits, dst as u64);
                push_block(&mut bits, src as u64);
            }
            Instruction::SubSat { dst, src } => {
                push_block(&mut bits, 3);
                push_block(&mut bits, dst as u64);
                push_block(&mut bits, src as u64);
            }
            Instruction::Jz { reg, target } => {
                push_block(&mut bits, 4);
                push_block(&mut bits, reg as u64);
                push_block(&mut bits, target);
            }
            Instruction::Jmp { target } => {
                push_block(&mut bits, 5);
                push_block(&mut bits, target);
            }
            Instruction::ReadOracle { dst, pos } => {
                push_block(&mut bits, 6);
                push_block(&mut bits, dst as u64);
                push_block(&mut bits, pos as u64);
            }
            Instruction::ReadInput { dst, pos } => {
                push_block(&mut bits, 7);
                push_block(&mut bits, dst as u64);
                push_block(&mut bits, pos as u64);
            }
            Instruction::Write { reg } => {
                push_block(&mut bits, 8);
                push_block(&mut bits, reg as u64);
            }
        }
    }
    bits
}

struct BlockReader<'a> {
    bits: &'a [bool],
    pos: usize,
}

impl<'a> BlockReader<'a> {
    fn next_block(&mut self) -> Option<u64> {
        let mut zeros = 0u64;
        while self.pos < self.bits.len() {
            let b = self.bits[self.pos];
            self.pos += 1;
            if b {
                return Some(zeros);
            }
            zeros += 1;
        }
        None
    }
}

fn reg(block: u64) -> u8 {
    (block % REG_COUNT as u64) as u8
}

/// Total decoding: every bit string denotes a program.
pub fn decode(bits: &[bool]) -> Program {
    let mut reader = BlockReader { bits, pos: 0 };
    let mut instructions = Vec::new();
    while let Some(op) = reader.next_block() {
        let ins = match op % OPCODE_COUNT {
            0 => {
                let (Some(d), Some(v)) = (reader.next_block(), reader.next_block()) else {
                    break;
                };
                Instruction::Const { dst: reg(d), value: v }
            }
            1 => {
                let (Some(d), Some(s)) = (reader.next_block(), reader.next_block()) else {
                    break;
                };
                Instruction::Move { dst: reg(d), src: reg(s) }
            }
            2 => {
                let (Some(d), Some(s)) = (reader.next_block(), reader.next_block()) else {
                    break;
                };
                Instruction::Add { dst: reg(d), src: reg(s) }
            }
            3 => {
                let (Some(d), Some(s)) = (reader.next_block(), reader.next_block()) else {
                    break;
                };
                Instruction::SubSat { dst: reg(d), src: reg(s) }
            }
            4 => {
                let (Some(r), Some(t)) = (reader.next_block(), reader.next_block()) else {
                    break;
                };
                Instruction::Jz { reg: reg(r), target: t }
            }
            5 => {
                let Some(t) = reader.next_block() else { break };
                Instruction::Jmp { target: t }
            }
            6 => {
                let (Some(d), Some(p)) = (reader.next_block(), reader.next_block()) else {
                    break;
                };
                Instruction::ReadOracle { dst: reg(d), pos: reg(p) }
            }
            7 => {
                let (Some(d), Some(p)) = (reader.next_block(), reader.next_block()) else {
                    break;
                };
                Instruction::ReadInput { dst: reg(d), pos: reg(p) }
            }
            _ => {
                let Some(r) = reader.next_block() else { break };
                Instruction::Write { reg: reg(r) }
            }
        };
        instructions.push(ins);
    }
    Program::new(instructions)
}

/// Pack a bit string into a natural, least significant bit first. Encoded
/// programs always end in a 1 (a block terminator), so nothing is lost.
pub fn bits_to_nat(bits: &[bool]) -> BigUint {
    let mut n = BigUint::zero();
    for (i, &b) in bits.iter().enumerate() {
        if b {
            n.set_bit(i as u64, true);
        }
    }
    n
}

/// Inverse of [`bits_to_nat`].
pub fn nat_to_bits(n: &BigUint) -> Vec<bool> {
    let len = n.bits();
    (0..len).map(|i| n.bit(i)).collect()
}

/// Machine numbering: even `2k` binds builtin combinator `k` (or a
/// registered host realizer for `k >= 8`), odd `2k+1` decodes `k`'s binary
/// expansion into a [`Program`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MachineIndex(pub BigUint);

impl MachineIndex {
    pub fn of_program(program: &Program) -> Self {
        let k = bits_to_nat(&encode(program));
        MachineIndex(k * 2u32 + 1u32)
    }

    pub fn as_nat(&self) -> &BigUint {
        &self.0
    }
}

/// The program bound by an odd machine index.
pub fn program_of_odd_index(k: &BigUint) -> Program {
    decode(&nat_to_bits(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn identity_like() -> Program {
        Program::new(vec![
            Instruction::Const { dst: 2, value: 1 },
            Instruction::ReadInput { dst: 0, pos: 1 },
            Instruction::Write { reg: 0 },
            Instruction::Add { dst: 1, src: 2 },
            Instruction::Jmp { target: 1 },
        ])
    }

    #[test]
    fn empty_program_round_trips() {
        let p = Program::default();
        assert!(encode(&p).is_empty());
        assert_eq!(decode(&encode(&p)), p);
    }

    #[test]
    fn structural_round_trip() {
        let p = identity_like();
        assert_eq!(decode(&encode(&p)), p);
    }

    #[test]
    fn all_ones_decodes() {
        let bits = vec![true; 64];
        let p = decode(&bits);
        // 21 complete CONST r0 0 instructions, one dangling opcode dropped.
        assert_eq!(p.len(), 21);
        assert!(p
            .instructions
            .iter()
            .all(|i| matches!(i, Instruction::Const { dst: 0, value: 0 })));
    }

    #[test]
    fn index_round_trip() {
        let p = identity_like();
        let idx = MachineIndex::of_program(&p);
        let k = (idx.0.clone() - 1u32) / 2u32;
        assert_eq!(program_of_odd_index(&k), p);
    }

    #[test]
    fn bits_nat_round_trip() {
        let bits = encode(&identity_like());
        assert_eq!(nat_to_bits(&bits_to_nat(&bits)), bits);
    }
}
