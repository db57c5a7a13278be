//! The instrumented interpreter.
//!
//! A [`MachineRun`] confines all mutable state of one execution: registers,
//! program counter, the append-only output buffer, and read instrumentation.
//! Interrupted read instructions leave the program counter in place, so a
//! run resumes exactly where it stopped when more fuel arrives.

use std::sync::{Arc, Mutex};

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use super::isa::{Instruction, Program, REG_COUNT};
use crate::fuel::{FuelMeter, Interrupt, Observation};
use crate::names::{Name, NameFn};

/// Read instrumentation and progress counters for a run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instrumentation {
    pub steps: u64,
    /// Highest oracle position read, if the oracle was read at all.
    pub max_oracle_read: Option<u64>,
    /// Highest input position read, if the input was read at all.
    pub max_input_read: Option<u64>,
    /// Step counter value at each completed WRITE.
    pub write_steps: Vec<u64>,
    pub output_len: u64,
    /// The program counter left the program; no further output will come.
    pub halted: bool,
}

pub struct MachineRun {
    program: Arc<Program>,
    oracle: Name,
    input: Name,
    regs: Vec<BigUint>,
    pc: u64,
    steps: u64,
    output: Vec<bool>,
    write_steps: Vec<u64>,
    max_oracle_read: Option<u64>,
    max_input_read: Option<u64>,
    halted: bool,
}

impl MachineRun {
    pub fn new(program: Arc<Program>, oracle: Name, input: Name) -> Self {
        MachineRun {
            program,
            oracle,
            input,
            regs: vec![BigUint::zero(); REG_COUNT],
            pc: 0,
            steps: 0,
            output: Vec::new(),
            write_steps: Vec::new(),
            max_oracle_read: None,
            max_input_read: None,
            halted: false,
        }
    }

    pub fn output(&self) -> &[bool] {
        &self.output
    }

    pub fn instrumentation(&self) -> Instrumentation {
        Instrumentation {
            steps: self.steps,
            max_oracle_read: self.max_oracle_read,
            max_input_read: self.max_input_read,
            write_steps: self.write_steps.clone(),
            output_len: self.output.len() as u64,
            halted: self.halted,
        }
    }

    /// Execute one instruction. A read that cannot complete leaves the
    /// machine unchanged apart from the fuel already spent.
    fn step(&mut self, meter: &mut FuelMeter) -> Observation<()> {
        if self.halted {
            return Err(Interrupt::FuelExhausted);
        }
        let Some(ins) = self.program.instructions.get(self.pc as usize) else {
            self.halted = true;
            return Err(Interrupt::FuelExhausted);
        };
        meter.charge(1)?;
        match *ins {
            Instruction::Const { dst, value } => {
                self.regs[dst as usize] = BigUint::from(value);
                self.pc += 1;
            }
            Instruction::Move { dst, src } => {
                self.regs[dst as usize] = self.regs[src as usize].clone();
                self.pc += 1;
            }
            Instruction::Add { dst, src } => {
                let addend = self.regs[src as usize].clone();
                self.regs[dst as usize] += addend;
                self.pc += 1;
            }
            Instruction::SubSat { dst, src } => {
                let (d, s) = (&self.regs[dst as usize], &self.regs[src as usize]);
                self.regs[dst as usize] = if d >= s { d - s } else { BigUint::zero() };
                self.pc += 1;
            }
            Instruction::Jz { reg, target } => {
                if self.regs[reg as usize].is_zero() {
                    self.pc = target;
                } else {
                    self.pc += 1;
                }
            }
            Instruction::Jmp { target } => {
                self.pc = target;
            }
            Instruction::ReadOracle { dst, pos } => {
                let position = self.regs[pos as usize]
                    .to_u64()
                    .ok_or(Interrupt::FuelExhausted)?;
                let bit = self.oracle.bit_metered(position, meter)?;
                self.max_oracle_read = Some(self.max_oracle_read.unwrap_or(0).max(position));
                self.regs[dst as usize] = BigUint::from(u8::from(bit));
                self.pc += 1;
            }
            Instruction::ReadInput { dst, pos } => {
                let position = self.regs[pos as usize]
                    .to_u64()
                    .ok_or(Interrupt::FuelExhausted)?;
                let bit = self.input.bit_metered(position, meter)?;
                self.max_input_read = Some(self.max_input_read.unwrap_or(0).max(position));
                self.regs[dst as usize] = BigUint::from(u8::from(bit));
                self.pc += 1;
            }
            Instruction::Write { reg } => {
                let bit = self.regs[reg as usize].bit(0);
                self.output.push(bit);
                self.steps += 1;
                self.write_steps.push(self.steps);
                self.pc += 1;
                return Ok(());
            }
        }
        self.steps += 1;
        Ok(())
    }

    /// Run until the output holds at least `want` bits.
    pub fn run_until_output(&mut self, want: u64, meter: &mut FuelMeter) -> Observation<()> {
        while (self.output.len() as u64) < want {
            self.step(meter)?;
        }
        Ok(())
    }

    /// Run for at most `steps` further instructions, stopping quietly at
    /// divergence or interrupts. Useful for instrumentation harnesses.
    pub fn advance(&mut self, steps: u64, meter: &mut FuelMeter) -> Observation<()> {
        for _ in 0..steps {
            match self.step(meter) {
                Ok(()) => {}
                Err(Interrupt::FuelExhausted) if self.halted => return Ok(()),
                Err(e) => return Err(e),
            }
        }
        Ok(())
    }
}

/// The output stream of a machine as a [`Name`]: bit `k` forces execution
/// until the machine has written `k + 1` bits.
struct MachineName {
    state: Mutex<MachineRun>,
}

impl NameFn for MachineName {
    fn bit(&self, idx: u64, meter: &mut FuelMeter) -> Observation<bool> {
        let mut run = self.state.lock().unwrap();
        if (run.output.len() as u64) <= idx {
            run.run_until_output(idx + 1, meter)?;
        }
        Ok(run.output[idx as usize])
    }

    fn label(&self) -> &'static str {
        "machine"
    }
}

/// The lazily evaluated output of `program` on the given streams.
pub fn machine_output(program: Arc<Program>, oracle: Name, input: Name) -> Name {
    Name::custom(Arc::new(MachineName {
        state: Mutex::new(MachineRun::new(program, oracle, input)),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::t2vm::asm::assemble;

    fn identity_program() -> Arc<Program> {
        Arc::new(
            assemble(
                "const r2 1\nloop: readinput r0 r1\nwrite r0\nadd r1 r2\njmp loop\n",
            )
            .unwrap(),
        )
    }

    #[test]
    fn identity_machine_copies_input() {
        let out = machine_output(identity_program(), Name::zeros(), Name::ones());
        assert_eq!(out.bit(3, 1_000), Ok(true));
        let input = Name::ultimately_periodic(vec![true, false, true], vec![false, true]);
        let out = machine_output(identity_program(), Name::zeros(), input.clone());
        assert_eq!(out.prefix(12, 10_000), input.prefix(12, 10_000));
    }

    #[test]
    fn empty_program_never_writes() {
        let out = machine_output(Arc::new(Program::default()), Name::zeros(), Name::zeros());
        assert_eq!(out.bit(0, 1_000), Err(Interrupt::FuelExhausted));
    }

    #[test]
    fn instrumentation_tracks_reads() {
        let mut run = MachineRun::new(identity_program(), Name::zeros(), Name::ones());
        let mut meter = FuelMeter::new(1_000);
        run.run_until_output(1, &mut meter).unwrap();
        let inst = run.instrumentation();
        assert_eq!(inst.max_input_read, Some(0));
        assert_eq!(inst.max_oracle_read, None);
        assert_eq!(inst.output_len, 1);

        run.run_until_output(10, &mut meter).unwrap();
        assert_eq!(run.instrumentation().max_input_read, Some(9));
    }

    #[test]
    fn reads_before_first_write_are_visible() {
        // Read input bits 0..9, then write a 1 forever.
        let mut src = String::from("const r2 1\n");
        for _ in 0..10 {
            src.push_str("readinput r0 r1\nadd r1 r2\n");
        }
        src.push_str("emit: write r2\njmp emit\n");
        let program = Arc::new(assemble(&src).unwrap());
        let mut run = MachineRun::new(program, Name::zeros(), Name::zeros());
        let mut meter = FuelMeter::new(1_000);
        run.run_until_output(1, &mut meter).unwrap();
        assert_eq!(run.instrumentation().max_input_read, Some(9));
    }

    #[test]
    fn interrupted_read_resumes() {
        let out = machine_output(identity_program(), Name::zeros(), Name::ones());
        // Not enough fuel at first, then enough: the same bit appears.
        assert_eq!(out.bit(5, 3), Err(Interrupt::FuelExhausted));
        assert_eq!(out.bit(5, 10_000), Ok(true));
        // And the cached prefix answers cheaply now.
        assert_eq!(out.bit(5, 2), Ok(true));
    }

    #[test]
    fn beyond_prefix_propagates() {
        let out = machine_output(
            identity_program(),
            Name::zeros(),
            Name::partial_word(vec![true, true]),
        );
        assert_eq!(out.bit(1, 10_000), Ok(true));
        assert_eq!(out.bit(2, 10_000), Err(Interrupt::BeyondPrefix));
    }
}
