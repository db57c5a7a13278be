//! Textual assembly for hand-written realizer programs.
//!
//! One instruction per line, `;` starts a comment, `name:` defines a label
//! usable as a jump target. Registers are `r0`..`r15`.

use std::collections::HashMap;

use thiserror::Error;

use super::isa::{Instruction, Program, REG_COUNT};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AsmError {
    #[error("line {line}: unknown mnemonic {found:?}")]
    UnknownMnemonic { line: usize, found: String },
    #[error("line {line}: expected {expected} operand(s)")]
    BadArity { line: usize, expected: usize },
    #[error("line {line}: bad register {found:?}")]
    BadRegister { line: usize, found: String },
    #[error("line {line}: bad number {found:?}")]
    BadNumber { line: usize, found: String },
    #[error("line {line}: unknown label {found:?}")]
    UnknownLabel { line: usize, found: String },
    #[error("line {line}: duplicate label {found:?}")]
    DuplicateLabel { line: usize, found: String },
}

fn parse_reg(tok: &str, line: usize) -> Result<u8, AsmError> {
    let bad = || AsmError::BadRegister {
        line,
        found: tok.to_string(),
    };
    let rest = tok.strip_prefix('r').ok_or_else(bad)?;
    let n: usize = rest.parse().map_err(|_| bad())?;
    if n >= REG_COUNT {
        return Err(bad());
    }
    Ok(n as u8)
}

enum Target {
    Absolute(u64),
    Label(String),
}

fn parse_target(tok: &str) -> Target {
    match tok.parse::<u64>() {
        Ok(n) => Target::Absolute(n),
        Err(_) => Target::Label(tok.to_string()),
    }
}

enum Pending {
    Done(Instruction),
    Jz { reg: u8, target: Target },
    Jmp { target: Target },
}

/// Assemble source text into a [`Program`].
pub fn assemble(source: &str) -> Result<Program, AsmError> {
    let mut labels: HashMap<String, u64> = HashMap::new();
    let mut pending: Vec<(usize, Pending)> = Vec::new();

    for (lineno, raw) in source.lines().enumerate() {
        let line = lineno + 1;
        let mut text = raw;
        if let Some(i) = text.find(';') {
            text = &text[..i];
        }
        let mut text = text.trim();
        while let Some(colon) = text.find(':') {
            let label = text[..colon].trim();
            if label.is_empty() || label.contains(char::is_whitespace) {
                break;
            }
            if labels
                .insert(label.to_string(), pending.len() as u64)
                .is_some()
            {
                return Err(AsmError::DuplicateLabel {
                    line,
                    found: label.to_string(),
                });
            }
            text = text[colon + 1..].trim();
        }
        if text.is_empty() {
            continue;
        }
        let toks: Vec<&str> = text.split_whitespace().collect();
        let mnemonic = toks[0].to_ascii_lowercase();
        let args = &toks[1..];
        let arity = |n: usize| -> Result<(), AsmError> {
            if args.len() == n {
                Ok(())
            } else {
                Err(AsmError::BadArity { line, expected: n })
            }
        };
        let ins = match mnemonic.as_str() {
            "const" => {
                arity(2)?;
                let value = args[1].parse::<u64>().map_err(|_| AsmError::BadNumber {
                    line,
                    found: args[1].to_string(),
                })?;
                Pending::Done(Instruction::Const {
                    dst: parse_reg(args[0], line)?,
                    value,
                })
            }
            "move" => {
                arity(2)?;
                Pending::Done(Instruction::Move {
                    dst: parse_reg(args[0], line)?,
                    src: parse_reg(args[1], line)?,
                })
            }
            "add" => {
                arity(2)?;
                Pending::Done(Instruction::Add {
                    dst: parse_reg(args[0], line)?,
                    src: parse_reg(args[1], line)?,
                })
            }
            "subsat" => {
                arity(2)?;
                Pending::Done(Instruction::SubSat {
                    dst: parse_reg(args[0], line)?,
                    src: parse_reg(args[1], line)?,
                })
            }
            "jz" => {
                arity(2)?;
                Pending::Jz {
                    reg: parse_reg(args[0], line)?,
                    target: parse_target(args[1]),
                }
            }
            "jmp" => {
                arity(1)?;
                Pending::Jmp {
                    target: parse_target(args[0]),
                }
            }
            "readoracle" => {
                arity(2)?;
                Pending::Done(Instruction::ReadOracle {
                    dst: parse_reg(args[0], line)?,
                    pos: parse_reg(args[1], line)?,
                })
            }
            "readinput" => {
                arity(2)?;
                Pending::Done(Instruction::ReadInput {
                    dst: parse_reg(args[0], line)?,
                    pos: parse_reg(args[1], line)?,
                })
            }
            "write" => {
                arity(1)?;
                Pending::Done(Instruction::Write {
                    reg: parse_reg(args[0], line)?,
                })
            }
            other => {
                return Err(AsmError::UnknownMnemonic {
                    line,
                    found: other.to_string(),
                })
            }
        };
        pending.push((line, ins));
    }

    let resolve = |target: Target, line: usize| -> Result<u64, AsmError> {
        match target {
            Target::Absolute(n) => Ok(n),
            Target::Label(l) => labels.get(&l).copied().ok_or(AsmError::UnknownLabel {
                line,
                found: l,
            }),
        }
    };

    let mut instructions = Vec::with_capacity(pending.len());
    for (line, p) in pending {
        instructions.push(match p {
            Pending::Done(i) => i,
            Pending::Jz { reg, target } => Instruction::Jz {
                reg,
                target: resolve(target, line)?,
            },
            Pending::Jmp { target } => Instruction::Jmp {
                target: resolve(target, line)?,
            },
        });
    }
    Ok(Program::new(instructions))
}

/// Render a program in the assembly syntax (numeric targets).
pub fn format_program(program: &Program) -> String {
    let mut out = String::new();
    for ins in &program.instructions {
        let line = match *ins {
            Instruction::Const { dst, value } => format!("const r{dst} {value}"),
            Instruction::Move { dst, src } => format!("move r{dst} r{src}"),
            Instruction::Add { dst, src } => format!("add r{dst} r{src}"),
            Instruction::SubSat { dst, src } => format!("subsat r{dst} r{src}"),
            Instruction::Jz { reg, target } => format!("jz r{reg} {target}"),
            Instruction::Jmp { target } => format!("jmp {target}"),
            Instruction::ReadOracle { dst, pos } => format!("readoracle r{dst} r{pos}"),
            Instruction::ReadInput { dst, pos } => format!("readinput r{dst} r{pos}"),
            Instruction::Write { reg } => format!("write r{reg}"),
        };
        out.push_str(&line);
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_and_comments() {
        let src = "\
            ; copy the input to the output\n\
            const r2 1\n\
            loop: readinput r0 r1\n\
            write r0\n\
            add r1 r2   ; advance\n\
            jmp loop\n";
        let p = assemble(src).unwrap();
        assert_eq!(p.len(), 5);
        assert_eq!(p.instructions[4], Instruction::Jmp { target: 1 });
    }

    #[test]
    fn format_parses_back() {
        let src = "const r2 1\nreadinput r0 r1\nwrite r0\nadd r1 r2\njmp 1\n";
        let p = assemble(src).unwrap();
        assert_eq!(assemble(&format_program(&p)).unwrap(), p);
    }

    #[test]
    fn rejects_unknown_label() {
        assert!(matches!(
            assemble("jmp nowhere"),
            Err(AsmError::UnknownLabel { .. })
        ));
    }
}
