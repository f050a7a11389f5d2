//! The `ofip` command implementations. Each returns the process exit code:
//! `0` success, `1` a campaign found failing checks, `2` usage or config
//! error.

use std::io::{self, Write};
use std::path::{Path, PathBuf};

use tempfile::NamedTempFile;

use crate::calc;
use crate::classical::{PNorm, Vector};
use crate::structures::{example_band, example_magnitude_target, paper_example_norm, ExampleVariant};
use crate::verifier::{run_campaign, CampaignConfig, CampaignReport, ConfigError, Execution};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Default)]
pub struct VerifyArgs {
    pub config: PathBuf,
    pub seed: Option<u64>,
    pub trials: Option<u64>,
    pub report: Option<PathBuf>,
    pub execution: Execution,
}

/// Writes `contents` to `path` via a temporary file in the same directory,
/// creating missing parent directories.
pub fn write_atomic(path: &Path, contents: &[u8]) -> io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    std::fs::create_dir_all(dir)?;
    let mut tmp = NamedTempFile::new_in(dir)?;
    tmp.write_all(contents)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

/// The CSV summary sits next to the JSON report.
pub fn csv_path(report: &Path) -> PathBuf {
    report.with_extension("csv")
}

/// Reads the config, applies command-line overrides (which beat config keys,
/// which beat `OFIP_SEED`), and checks that a seed and report path exist.
pub fn load_config(args: &VerifyArgs) -> Result<CampaignConfig, ConfigError> {
    let text = std::fs::read_to_string(&args.config)
        .map_err(|e| ConfigError::new("--config", format!("{}: {e}", args.config.display())))?;
    let mut config = CampaignConfig::from_json(&text)?;
    if let Some(seed) = args.seed {
        config.seed = Some(seed);
    }
    if let Some(trials) = args.trials {
        config.trials = trials;
    }
    if let Some(report) = &args.report {
        config.report_path = Some(report.clone());
    }
    let config = config.with_env_seed()?;
    config.seed()?;
    if config.report_path.is_none() {
        return Err(ConfigError::new("report_path", "missing (set it in the config or pass --report)"));
    }
    Ok(config)
}

pub fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let config = match load_config(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let report = match run_campaign(&config, args.execution) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let path = config.report_path.clone().expect("checked in load_config");
    let written = write_atomic(&path, report.to_json().as_bytes())
        .and_then(|_| write_atomic(&csv_path(&path), report.to_csv().as_bytes()));
    if let Err(e) = written {
        let _ = writeln!(err, "error: writing {}: {e}", path.display());
        return EXIT_USAGE;
    }
    let _ = print_summary(&report, &path, out);
    if report.all_passed {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

fn print_summary(report: &CampaignReport, path: &Path, out: &mut dyn Write) -> io::Result<()> {
    let failed: Vec<_> = report.failed_checks().collect();
    writeln!(
        out,
        "seed {} | {} trials | {} checks | {} failing",
        report.seed,
        report.trials,
        report.checks.len(),
        failed.len()
    )?;
    for c in failed {
        writeln!(out, "FAIL {} ({}/{} passed)", c.check_id, c.passes, c.trials)?;
        if let Some(cx) = &c.counterexample {
            let i = &cx.shrunk.inputs;
            writeln!(
                out,
                "  shrunk from trial {} in {} steps: alpha={} x={}{}",
                cx.trial_index,
                cx.shrink_steps,
                i.alpha,
                i.x,
                i.y.as_ref().map(|y| format!(" y={y}")).unwrap_or_default()
            )?;
        }
    }
    writeln!(out, "report: {} (+ {})", path.display(), csv_path(path).display())
}

pub fn cmd_example(alpha: f64, x: [f64; 2], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match example_text(alpha, x) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn example_text(alpha: f64, x: [f64; 2]) -> Result<String, Box<dyn std::error::Error>> {
    let v = Vector::real(&x)?;
    let corrected = paper_example_norm(alpha, &v, ExampleVariant::Corrected)?;
    let verbatim = paper_example_norm(alpha, &v, ExampleVariant::Verbatim)?;
    let target = example_magnitude_target(alpha, &v)?;
    let band = example_band(&v)?;
    let m = corrected.norm();
    let slack = 1e-12 * (1.0 + PNorm::Two.eval(&v));
    let canon = band.canonical();
    let contained = canon.lo() - slack <= m && m <= canon.hi() + slack;
    Ok(format!(
        "alpha              {alpha}\n\
         x                  ({}, {})\n\
         value (corrected)  {corrected}\n\
         value (verbatim)   {verbatim}\n\
         magnitude          {m}\n\
         verbatim magnitude {}\n\
         target magnitude   {target}\n\
         interval           {band} (canonical {canon})\n\
         contained          {contained}\n",
        x[0],
        x[1],
        verbatim.norm(),
    ))
}

pub fn cmd_interval(expr: &str, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match calc::evaluate(expr) {
        Ok(v) => {
            let _ = writeln!(out, "{v} (canonical {})", v.canonical());
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if let calc::CalcError::Parse { position, .. } = e {
                let _ = writeln!(err, "  {expr}\n  {}^", " ".repeat(position));
            }
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_interval(expr: &str) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = cmd_interval(expr, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn interval_command() {
        assert_eq!(run_interval("[3,4] (-) [2,10]"), (0, "[1,-6]_o (canonical [-6,1])\n".into(), String::new()));
        let (code, _, err) = run_interval("[3,4] (-)");
        assert_eq!(code, 2);
        assert!(err.contains("position 9"));
    }

    #[test]
    fn example_command() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(cmd_example(1.0, [1.0, 0.0], &mut out, &mut err), 0);
        let text = String::from_utf8(out).unwrap();
        assert!(text.contains("magnitude          3\n"), "{text}");
        assert!(text.contains("[3,2]_o"));
        assert!(text.contains("contained          true"));
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(cmd_example(0.0, [1.0, 0.0], &mut out, &mut err), 2);
        assert_eq!(cmd_example(1.5, [1.0, 0.0], &mut out, &mut err), 2);
    }

    #[test]
    fn example_zero_vector() {
        let text = example_text(0.3, [0.0, 0.0]).unwrap();
        assert!(text.contains("magnitude          0\n"));
        assert!(text.contains("[0,0]_o"));
        assert!(text.contains("contained          true"));
    }

    #[test]
    fn atomic_write_replaces() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("r.json");
        write_atomic(&p, b"one").unwrap();
        write_atomic(&p, b"two").unwrap();
        assert_eq!(std::fs::read(&p).unwrap(), b"two");
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    }
}
