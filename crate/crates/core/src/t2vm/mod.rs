//! A minimal Type-2 virtual machine.
//!
//! Function-space names `0^n 1 p` are executable: odd `n` decodes a bit
//! string into a register-machine program run by the instrumented
//! interpreter, even `n` dispatches into the combinator builtins or the
//! host realizer table.

pub mod asm;
pub mod interp;
pub mod isa;
pub mod univ;

pub use asm::{assemble, format_program, AsmError};
pub use interp::{machine_output, Instrumentation, MachineRun};
pub use isa::{decode, encode, Instruction, MachineIndex, Program, REG_COUNT};
pub use univ::{
    apply_name, divergent_name, function_name, register_host, run_machine, Builtin, HostRealizer,
    HostSlot,
};
