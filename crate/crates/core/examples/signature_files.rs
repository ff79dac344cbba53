//! Reading signatures and codes from text, and driving the command line.

use vkernel::frontend::{cli, parse_expr, parse_signature, print_expr};
use vkernel::universe::el;

const SIG: &str = include_str!("data/standard.vk");

fn main() -> vkernel::Result<()> {
    let sig = parse_signature(SIG)?;
    let code = parse_expr("(pi (n bool) ((n tri) (sum (unit) (unit))))", &sig)?;
    println!("{} has {} elements", print_expr(&code), el(&sig, &code)?.size());

    for bad in ["(id (n bool) 0 2)", "(pi (n bool) ((unit)))", "(sum (unit)", "(n nat)"] {
        println!("{bad:<24} -> {}", parse_expr(bad, &sig).unwrap_err());
    }

    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/standard.vk");
    let mut out = Vec::new();
    let code = cli::run(
        ["vk", "eq", path, "-e", "(sum (unit) (unit))", "-f", "(n bool)", "--pred", "none"],
        &mut out,
        &mut std::io::stderr(),
    );
    print!("vk eq ... -> exit {code}: {}", String::from_utf8_lossy(&out));
    Ok(())
}
