use transfer::cli::run_command;

fn main() {
    let (code, output) = run_command(std::env::args_os());
    if code == 0 {
        print!("{output}");
    } else {
        eprint!("{output}");
    }
    std::process::exit(code);
}
