//! Estimating growth constants from many exact terms.

use invseq::analysis::{check_root_against, estimate_growth, reference_growth, GrowthModel};
use invseq::gentree::{count_class, ClassId};

fn main() -> invseq::Result<()> {
    for c in ClassId::ALL {
        let terms = if c.is_algebraic() { 200 } else { 300 };
        let seq = count_class(c, terms);
        let e = estimate_growth(&seq, GrowthModel::Algebraic)?;
        let reference = reference_growth(c).map(|r| format!("{r:.6}")).unwrap_or_else(|| "-".into());
        let root = check_root_against(c, e.mu, 1e-3).map(|r| if r.passed() { " root ok" } else { " root MISSED" }).unwrap_or("");
        println!("{c:>6} mu {:.6} g {:+.4} (reference {reference}){root}", e.mu, e.g);
    }
    for c in [ClassId::C247, ClassId::C759, ClassId::C2106] {
        let e = estimate_growth(&count_class(c, 300), GrowthModel::Stretched { fixed_mu: None })?;
        let s = e.stretched.expect("stretched model");
        println!("{c:>6} stretched: mu {:.4} log mu1 {:.3} g {:.3} rms {:.1e}", e.mu, s.log_mu1, e.g, e.diagnostics.residual_rms);
    }
    Ok(())
}
