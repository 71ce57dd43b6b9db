use std::io::Write;
use std::path::Path;
use std::process::Command;

use super::{emit_dimacs, CnfInstance, ColoringError, SatResult};

/// Runs `solver <file.cnf>` on the DIMACS form of `instance`.
///
/// Accepts SAT-competition output (`s SATISFIABLE` / `s UNSATISFIABLE`,
/// model on `v` lines) as well as a bare `SAT` / `UNSAT` line followed by
/// the model literals. A claimed model is checked against the instance.
pub fn external_decide(solver: &Path, instance: &CnfInstance) -> Result<SatResult, ColoringError> {
    let mut file = tempfile::Builder::new()
        .suffix(".cnf")
        .tempfile()
        .map_err(|e| ColoringError::External(format!("temporary file: {e}")))?;
    file.write_all(emit_dimacs(instance).as_bytes())
        .and_then(|_| file.flush())
        .map_err(|e| ColoringError::External(format!("temporary file: {e}")))?;
    let output = Command::new(solver)
        .arg(file.path())
        .output()
        .map_err(|e| ColoringError::External(format!("{}: {e}", solver.display())))?;
    let stdout = String::from_utf8_lossy(&output.stdout);
    let result = parse_solver_output(&stdout, instance.num_vars())?;
    if let SatResult::Sat(model) = &result {
        if !instance.is_satisfied_by(model) {
            return Err(ColoringError::External(
                "reported model does not satisfy the instance".into(),
            ));
        }
    }
    Ok(result)
}

fn parse_solver_output(text: &str, num_vars: usize) -> Result<SatResult, ColoringError> {
    let mut status: Option<bool> = None;
    let mut model = vec![false; num_vars];
    let mut seen = vec![false; num_vars];
    for line in text.lines() {
        let line = line.trim();
        let body = match line.split_once(char::is_whitespace) {
            Some(("s", rest)) => {
                status = Some(parse_status(rest.trim())?);
                continue;
            }
            Some(("v", rest)) => rest,
            Some(("c", _)) => continue,
            _ if line == "c" || line.is_empty() => continue,
            _ if status.is_none()
                && matches!(line, "SAT" | "UNSAT" | "SATISFIABLE" | "UNSATISFIABLE") =>
            {
                status = Some(parse_status(line)?);
                continue;
            }
            _ => line,
        };
        if status.is_none() {
            return Err(ColoringError::External(format!(
                "unexpected output `{line}`"
            )));
        }
        for tok in body.split_whitespace() {
            let lit: i64 = tok
                .parse()
                .map_err(|_| ColoringError::External(format!("bad model literal `{tok}`")))?;
            if lit == 0 {
                continue;
            }
            let v = lit.unsigned_abs() as usize;
            if v > num_vars {
                return Err(ColoringError::External(format!(
                    "model literal {lit} out of range"
                )));
            }
            model[v - 1] = lit > 0;
            seen[v - 1] = true;
        }
    }
    match status {
        None => Err(ColoringError::External("no result line".into())),
        Some(false) => Ok(SatResult::Unsat),
        Some(true) if seen.iter().all(|&s| s) => Ok(SatResult::Sat(model)),
        Some(true) => Err(ColoringError::External("incomplete model".into())),
    }
}

fn parse_status(s: &str) -> Result<bool, ColoringError> {
    match s {
        "SAT" | "SATISFIABLE" => Ok(true),
        "UNSAT" | "UNSATISFIABLE" => Ok(false),
        _ => Err(ColoringError::External(format!("unknown status `{s}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn competition_format() {
        let out = "c hello\ns SATISFIABLE\nv 1 -2\nv 3 0\n";
        assert_eq!(
            parse_solver_output(out, 3).unwrap(),
            SatResult::Sat(vec![true, false, true])
        );
        assert_eq!(
            parse_solver_output("s UNSATISFIABLE\n", 3).unwrap(),
            SatResult::Unsat
        );
    }

    #[test]
    fn bare_format() {
        assert_eq!(
            parse_solver_output("SAT\n-1 2 0\n", 2).unwrap(),
            SatResult::Sat(vec![false, true])
        );
        assert_eq!(parse_solver_output("UNSAT\n", 2).unwrap(), SatResult::Unsat);
    }

    #[test]
    fn malformed_output() {
        assert!(parse_solver_output("", 2).is_err());
        assert!(parse_solver_output("SAT\n1 0\n", 2).is_err());
        assert!(parse_solver_output("SAT\n1 5 0\n", 2).is_err());
        assert!(parse_solver_output("s MAYBE\n", 2).is_err());
    }

    #[test]
    fn missing_solver() {
        let inst = CnfInstance::new(1, vec![vec![1]]).unwrap();
        assert!(external_decide(Path::new("/nonexistent/solver"), &inst).is_err());
    }
}
