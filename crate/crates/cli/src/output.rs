use serde_json::Value;

use crate::Exit;

/// What a command produced, before it is rendered in the chosen format.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub text: String,
    pub json: Value,
    /// Printed verbatim regardless of format (a model file or DOT graph).
    pub raw: bool,
    pub exit: Exit,
}

impl Outcome {
    pub fn new(text: String, json: Value, exit: Exit) -> Self {
        Outcome {
            text,
            json,
            raw: false,
            exit,
        }
    }

    pub fn raw(text: String) -> Self {
        Outcome {
            text,
            json: Value::Null,
            raw: true,
            exit: Exit::Ok,
        }
    }
}

/// ANSI styling for text output; a no-op unless enabled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Paint {
    pub enabled: bool,
}

impl Paint {
    fn wrap(self, code: &str, s: &str) -> String {
        if self.enabled {
            format!("\x1b[{code}m{s}\x1b[0m")
        } else {
            s.to_owned()
        }
    }

    pub fn good(self, s: &str) -> String {
        self.wrap("32", s)
    }

    pub fn bad(self, s: &str) -> String {
        self.wrap("31", s)
    }

    pub fn note(self, s: &str) -> String {
        self.wrap("33", s)
    }

    pub fn verdict(self, ok: bool, yes: &str, no: &str) -> String {
        if ok {
            self.good(yes)
        } else {
            self.bad(no)
        }
    }
}
