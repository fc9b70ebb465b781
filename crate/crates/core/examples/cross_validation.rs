//! Runs every cross-validation suite. Arguments: [seed] [trials] [max-n].

use interlace::check::{render_reports, run_all, CheckConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let default = CheckConfig::default();
    let cfg = CheckConfig {
        seed: args
            .first()
            .map(|s| s.parse())
            .transpose()?
            .unwrap_or(default.seed),
        trials: args
            .get(1)
            .map(|s| s.parse())
            .transpose()?
            .unwrap_or(default.trials),
        max_n: args
            .get(2)
            .map(|s| s.parse())
            .transpose()?
            .unwrap_or(default.max_n),
    };
    let reports = run_all(&cfg)?;
    print!("{}", render_reports(&reports));
    let failures: usize = reports.iter().map(|r| r.failures()).sum();
    if failures > 0 {
        std::process::exit(1);
    }
    Ok(())
}
