//! Writes the two worked-example graphs as DIMACS files into the given directory.
fn main() {
    let dir = std::path::PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "fixtures".into()));
    for (name, g) in [
        ("fig1.clq", cliquelab::fixtures::figure1()),
        ("fig2.clq", cliquelab::fixtures::figure2()),
    ] {
        std::fs::write(dir.join(name), cliquelab::to_dimacs(&g) + "\n").unwrap();
    }
}
