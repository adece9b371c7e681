use std::io::Write;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let out = isospec::cli::run_command(&args, &mut std::io::stdin());
    std::io::stdout().write_all(out.json.as_bytes()).expect("stdout");
    std::process::exit(out.code);
}
