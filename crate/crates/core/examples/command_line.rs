// Driving the command-line front end in-process.

use isospec::cli::run_command;

pub fn run_example() -> isospec::Result<()> {
    let args: Vec<String> = ["spectrum", "--map", "field: 7^1; num=[0,0,1]; den=[1]", "--n", "2"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let out = run_command(&args, &mut std::io::empty());
    println!("exit {}\n{}", out.code, out.json);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
