use magiclab_core::verify::*;
fn main() {
    let r = run("all", &VerifyParams::default()).unwrap();
    print!("{}", render_table(&r));
}
