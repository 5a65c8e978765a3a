use std::io::Write;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = konno::cli::run(&args, &mut out);
    let _ = out.flush();
    std::process::exit(code);
}
