use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, output) = pidecomp_cli::dispatch(std::env::args_os());
    if code == pidecomp_cli::EXIT_INPUT {
        eprint!("{output}");
    } else {
        print!("{output}");
    }
    ExitCode::from(code as u8)
}
