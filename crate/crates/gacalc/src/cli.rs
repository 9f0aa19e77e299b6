//! Command-line front end: the `eval`, `table`, `repl` and `check`
//! subcommands.
//!
//! [`run`] takes explicit argument and stream handles so the whole
//! interface is testable in-process; `main` passes the real ones.
//!
//! Exit codes: 0 on success, 1 when an expression fails to lex, parse,
//! evaluate or pass a membership check, 2 on usage errors (including
//! a table too large to print).

use std::io::{BufRead, Write};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use crate::expr::{self, Expr};
use crate::multivector::Multivector;
use crate::signature::Signature;
use crate::word::GeneratorWord;

pub const EXIT_OK: i32 = 0;
pub const EXIT_EVAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(name = "gacalc", version, about = "Exact geometric algebra calculator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression and print its canonical form
    Eval {
        /// Require every blade and the result to lie in GA(p,q)
        #[arg(long, value_name = "P,Q")]
        signature: Option<Signature>,
        /// Recheck a pure product of blade literals against the word reducer
        #[arg(long)]
        check_oracle: bool,
        /// Print one line per nonzero grade instead of a single sum
        #[arg(long)]
        grades: bool,
        /// Expression, e.g. "(1 + e[0])*e[-1]"
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Print the multiplication table of GA(p,q)
    Table {
        /// Signature as "p,q"
        signature: Signature,
        /// Emit one tab-separated line per cell instead of the aligned table
        #[arg(long)]
        tsv: bool,
    },
    /// Evaluate expressions interactively; `ans` names the last result
    Repl {
        /// Require every blade and every result to lie in GA(p,q)
        #[arg(long, value_name = "P,Q")]
        signature: Option<Signature>,
    },
    /// Succeed only if the expression's value lies in GA(p,q)
    Check {
        /// Signature as "p,q"
        signature: Signature,
        /// Expression to evaluate
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
}

/// Parses `args` (the first entry names the program) and runs the
/// selected subcommand against the given streams. Returns the process
/// exit code.
pub fn run(
    args: impl IntoIterator<Item = String>,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version land here but are ordinary output.
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    write!(stdout, "{e}").ok();
                    EXIT_OK
                }
                _ => {
                    write!(stderr, "{e}").ok();
                    EXIT_USAGE
                }
            };
        }
    };
    match cli.command {
        Command::Eval {
            signature,
            check_oracle,
            grades,
            expr,
        } => eval_command(signature, check_oracle, grades, &expr, stdout, stderr),
        Command::Table { signature, tsv } => table_command(signature, tsv, stdout, stderr),
        Command::Repl { signature } => repl(signature, stdin, stdout, stderr),
        Command::Check { signature, expr } => check_command(signature, &expr, stderr),
    }
}

fn eval_command(
    signature: Option<Signature>,
    check_oracle: bool,
    grades: bool,
    source: &str,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let expr = match expr::parse_str(source) {
        Ok(expr) => expr,
        Err(e) => {
            writeln!(stderr, "error: {e}").ok();
            return EXIT_EVAL;
        }
    };
    let value = match evaluate_gated(&expr, None, signature.as_ref()) {
        Ok(value) => value,
        Err(message) => {
            writeln!(stderr, "error: {message}").ok();
            return EXIT_EVAL;
        }
    };
    if check_oracle {
        if let Err(message) = oracle_agrees(&expr, &value) {
            writeln!(stderr, "error: {message}").ok();
            return EXIT_EVAL;
        }
    }
    if grades {
        for grade in value.grades() {
            writeln!(stdout, "{grade}: {}", value.grade_project(grade)).ok();
        }
    } else {
        writeln!(stdout, "{value}").ok();
    }
    EXIT_OK
}

fn table_command(
    signature: Signature,
    tsv: bool,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    match signature.cayley_table() {
        Ok(table) => {
            let text = if tsv {
                table.render_tsv()
            } else {
                table.render_pretty()
            };
            write!(stdout, "{text}").ok();
            EXIT_OK
        }
        Err(e) => {
            writeln!(stderr, "error: {e}").ok();
            EXIT_USAGE
        }
    }
}

fn check_command(signature: Signature, source: &str, stderr: &mut dyn Write) -> i32 {
    let expr = match expr::parse_str(source) {
        Ok(expr) => expr,
        Err(e) => {
            writeln!(stderr, "error: {e}").ok();
            return EXIT_EVAL;
        }
    };
    let value = match expr::eval(&expr) {
        Ok(value) => value,
        Err(e) => {
            writeln!(stderr, "error: {e}").ok();
            return EXIT_EVAL;
        }
    };
    if signature.contains(&value) {
        EXIT_OK
    } else {
        writeln!(stderr, "error: value {value} is outside {signature}").ok();
        EXIT_EVAL
    }
}

fn repl(
    signature: Option<Signature>,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let mut ans: Option<Multivector> = None;
    let mut line = String::new();
    loop {
        write!(stdout, "ga> ").ok();
        stdout.flush().ok();
        line.clear();
        match stdin.read_line(&mut line) {
            Ok(0) => {
                // End of input: finish the prompt line before leaving.
                writeln!(stdout).ok();
                return EXIT_OK;
            }
            Ok(_) => {}
            Err(e) => {
                writeln!(stderr, "error: {e}").ok();
                return EXIT_EVAL;
            }
        }
        let source = line.trim();
        if source.is_empty() {
            continue;
        }
        if source == "quit" || source == "exit" {
            return EXIT_OK;
        }
        let result = expr::parse_str(source)
            .map_err(|e| e.to_string())
            .and_then(|expr| evaluate_gated(&expr, ans.as_ref(), signature.as_ref()));
        match result {
            Ok(value) => {
                writeln!(stdout, "{value}").ok();
                ans = Some(value);
            }
            Err(message) => {
                writeln!(stderr, "error: {message}").ok();
            }
        }
    }
}

// Membership gate shared by `eval` and the REPL: with a signature given,
// every blade literal must lie in it before evaluation runs and the
// value must lie in it afterwards.
fn evaluate_gated(
    expr: &Expr,
    ans: Option<&Multivector>,
    signature: Option<&Signature>,
) -> Result<Multivector, String> {
    if let Some(sig) = signature {
        for blade in expr.blade_literals() {
            if !sig.contains_blade(blade) {
                return Err(format!("blade {blade} is outside {sig}"));
            }
        }
    }
    let value = expr::eval_with(expr, ans).map_err(|e| e.to_string())?;
    if let Some(sig) = signature {
        if !sig.contains(&value) {
            return Err(format!("value {value} is outside {sig}"));
        }
    }
    Ok(value)
}

// The word reducer recomputes a pure product of blade literals from
// scratch; disagreement with the coefficient arithmetic is a bug worth
// failing loudly over. Expressions of any other shape are left alone.
fn oracle_agrees(expr: &Expr, value: &Multivector) -> Result<(), String> {
    let Some(word) = blade_product_word(expr) else {
        return Ok(());
    };
    let reduced = word.reduce().map_err(|e| e.to_string())?;
    if &Multivector::from(reduced.clone()) == value {
        Ok(())
    } else {
        Err(format!(
            "word reduction gives {reduced}, but the product gave {value}"
        ))
    }
}

fn blade_product_word(expr: &Expr) -> Option<GeneratorWord> {
    match expr {
        Expr::Blade(blade) => Some(GeneratorWord::from(blade)),
        Expr::Mul(lhs, rhs) => Some(blade_product_word(lhs)?.concat(&blade_product_word(rhs)?)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Cursor;

    fn run_cli(argv: &[&str], input: &str) -> (i32, String, String) {
        let args = std::iter::once("gacalc").chain(argv.iter().copied());
        let mut stdin = Cursor::new(input.as_bytes().to_vec());
        let mut stdout = Vec::new();
        let mut stderr = Vec::new();
        let code = run(
            args.map(str::to_string),
            &mut stdin,
            &mut stdout,
            &mut stderr,
        );
        (
            code,
            String::from_utf8(stdout).unwrap(),
            String::from_utf8(stderr).unwrap(),
        )
    }

    #[test]
    fn eval_prints_canonical_form() {
        let (code, out, err) = run_cli(&["eval", "e[0]^2"], "");
        assert_eq!((code, out.as_str(), err.as_str()), (EXIT_OK, "1\n", ""));
    }

    #[test]
    fn eval_accepts_a_leading_minus() {
        let (code, out, _) = run_cli(&["eval", "-e[0]"], "");
        assert_eq!((code, out.as_str()), (EXIT_OK, "-e[0]\n"));
    }

    #[test]
    fn eval_reports_parse_errors_on_stderr() {
        let (code, out, err) = run_cli(&["eval", "e[0] e[1]"], "");
        assert_eq!(code, EXIT_EVAL);
        assert_eq!(out, "");
        assert_eq!(
            err,
            "error: byte 5: expected '+', '-' or end of input, found blade literal 'e[1]'\n"
        );
    }

    #[test]
    fn eval_enforces_the_signature_gate() {
        let (code, _, err) = run_cli(&["eval", "--signature", "1,0", "e[1]"], "");
        assert_eq!(code, EXIT_EVAL);
        assert_eq!(err, "error: blade e[1] is outside GA(1,0)\n");

        let (code, out, _) = run_cli(&["eval", "--signature", "1,0", "e[0]"], "");
        assert_eq!((code, out.as_str()), (EXIT_OK, "e[0]\n"));
    }

    #[test]
    fn eval_splits_grades_on_request() {
        let (code, out, _) = run_cli(&["eval", "--grades", "1 + 2*e[0] + e[-1]*e[0]"], "");
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "0: 1\n1: 2*e[0]\n2: e[-1,0]\n");
    }

    #[test]
    fn oracle_flag_confirms_blade_products() {
        let (code, out, _) = run_cli(&["eval", "--check-oracle", "e[3]*e[1]*e[3]"], "");
        assert_eq!((code, out.as_str()), (EXIT_OK, "-e[1]\n"));
        // Not a pure blade product: the flag has nothing to recheck.
        let (code, out, _) = run_cli(&["eval", "--check-oracle", "1 + e[0]"], "");
        assert_eq!((code, out.as_str()), (EXIT_OK, "1 + e[0]\n"));
    }

    #[test]
    fn table_renders_both_formats() {
        let (code, out, _) = run_cli(&["table", "0,1"], "");
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("e[-1] | +e[-1] -e[]"));

        let (code, out, _) = run_cli(&["table", "0,1", "--tsv"], "");
        assert_eq!(code, EXIT_OK);
        assert_eq!(
            out,
            "e[]\te[]\t+1\te[]\ne[]\te[-1]\t+1\te[-1]\ne[-1]\te[]\t+1\te[-1]\ne[-1]\te[-1]\t-1\te[]\n"
        );
    }

    #[test]
    fn oversized_tables_are_usage_errors() {
        let (code, _, err) = run_cli(&["table", "9,0"], "");
        assert_eq!(code, EXIT_USAGE);
        assert!(err.starts_with("error: "));
    }

    #[test]
    fn check_tests_only_the_final_value() {
        assert_eq!(run_cli(&["check", "1,0", "e[0]"], "").0, EXIT_OK);
        // The intermediate e[1] is outside GA(1,0) but the value is 1.
        assert_eq!(run_cli(&["check", "1,0", "e[1]*e[1]"], "").0, EXIT_OK);

        let (code, _, err) = run_cli(&["check", "1,0", "e[1]"], "");
        assert_eq!(code, EXIT_EVAL);
        assert_eq!(err, "error: value e[1] is outside GA(1,0)\n");
    }

    #[test]
    fn repl_threads_ans_and_reports_errors_inline() {
        let (code, out, err) = run_cli(&["repl"], "e[0]^2\nans + 1\n\nbogus\nquit\n");
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "ga> 1\nga> 2\nga> ga> ga> ");
        assert_eq!(
            err,
            "error: byte 0: expected a number, a blade literal, 'ans', '-' or '(', \
             found identifier 'bogus'\n"
        );
    }

    #[test]
    fn repl_ends_cleanly_on_eof() {
        let (code, out, _) = run_cli(&["repl"], "1 + 1\n");
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "ga> 2\nga> \n");
    }

    #[test]
    fn repl_signature_gate_applies_per_line() {
        let (code, out, err) = run_cli(&["repl", "--signature", "0,1"], "e[-1]^2\ne[0]\nexit\n");
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "ga> -1\nga> ga> ");
        assert_eq!(err, "error: blade e[0] is outside GA(0,1)\n");
    }

    #[test]
    fn ans_is_unbound_outside_the_repl() {
        let (code, _, err) = run_cli(&["eval", "ans + 1"], "");
        assert_eq!(code, EXIT_EVAL);
        assert_eq!(err, "error: no value bound to 'ans' yet\n");
    }

    #[test]
    fn usage_errors_exit_with_two() {
        assert_eq!(run_cli(&[], "").0, EXIT_USAGE);
        assert_eq!(run_cli(&["frobnicate"], "").0, EXIT_USAGE);
        assert_eq!(run_cli(&["eval"], "").0, EXIT_USAGE);
        assert_eq!(run_cli(&["table", "one,two"], "").0, EXIT_USAGE);
        assert_eq!(run_cli(&["table", "0,1", "--bogus"], "").0, EXIT_USAGE);
    }

    #[test]
    fn help_and_version_are_ordinary_output() {
        let (code, out, err) = run_cli(&["--help"], "");
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("eval"));
        assert!(err.is_empty());

        let (code, out, _) = run_cli(&["--version"], "");
        assert_eq!(code, EXIT_OK);
        assert!(out.starts_with("gacalc "));
    }
}
