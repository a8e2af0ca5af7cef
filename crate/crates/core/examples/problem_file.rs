//! Running commands on a problem file and rendering the reports.
use divclass::cli::run;

fn main() -> divclass::Result<()> {
    let data = concat!(env!("CARGO_MANIFEST_DIR"), "/data/segre23.json");
    print!("{}", run(["divclass", "class-group", data])?);
    println!();
    print!("{}", run(["divclass", "mu", data, "--class", "-2"])?);
    println!();
    print!("{}", run(["divclass", "depth-bounds", data, "--format", "machine"])?);
    Ok(())
}
