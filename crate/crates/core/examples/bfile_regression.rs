//! Writing a b-file and checking it with the command line.

use std::process::Command;

use invseq::cli::render_bfile;
use invseq::gentree::{count_class, ClassId};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::temp_dir().join("b1833A.txt");
    std::fs::write(&path, render_bfile(&count_class(ClassId::C1833A, 100)))?;
    println!("wrote {}", path.display());

    let mut out = Vec::new();
    let ok = invseq::cli::run_with(
        ["invseq", "count", "--class", "1833A", "--n", "100", "--compare", path.to_str().unwrap()],
        &mut out,
    )?;
    print!("{}", String::from_utf8(out)?);
    println!("in-process verdict: {ok}");

    if let Ok(bin) = std::env::var("INVSEQ_BIN") {
        let status = Command::new(bin).args(["count", "--class", "1833A", "--n", "100", "--compare"]).arg(&path).status()?;
        println!("binary exit status: {status}");
    }
    Ok(())
}
