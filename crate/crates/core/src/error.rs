use alloc::string::String;

/// Errors produced by the core pipeline.
///
/// Validation errors carry the owning `video_id` whenever the failing type
/// knows it, so callers can report which record of a batch was rejected.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An argument is outside the mathematical domain of an operation.
    #[error("domain error in {context}: {message}")]
    Domain {
        /// Operation that rejected the argument.
        context: &'static str,
        /// What was wrong with the value.
        message: String,
    },

    /// A domain type invariant does not hold.
    #[error("validation error{}: field `{field}`: {message}", fmt_video(.video_id))]
    Validation {
        /// Owning video, when known at the failure site.
        video_id: Option<String>,
        /// Field that violated its invariant.
        field: &'static str,
        /// Description of the violation.
        message: String,
    },

    /// Array shapes do not line up.
    #[error("dimension mismatch in {context}: expected {expected}, got {actual}")]
    Dimension {
        /// Operation that detected the mismatch.
        context: &'static str,
        /// Expected shape or length.
        expected: String,
        /// Shape or length actually supplied.
        actual: String,
    },

    /// Inconsistent configuration (head counts, threshold ladders, ...).
    #[error("configuration error: {message}")]
    Config {
        /// Description of the inconsistency.
        message: String,
    },

    /// A prediction references a video with no annotations.
    #[error("no annotations for video {video_id:?}")]
    MissingAnnotations {
        /// Video named by the prediction.
        video_id: String,
    },

    /// Training produced a non-finite loss.
    #[error("training diverged at step {step}: {message}")]
    Training {
        /// Global optimisation step at which the loss became non-finite.
        step: usize,
        /// Details (head index, loss value).
        message: String,
    },
}

fn fmt_video(video_id: &Option<String>) -> String {
    match video_id {
        Some(id) => alloc::format!(" for video {id:?}"),
        None => String::new(),
    }
}

impl Error {
    pub(crate) fn domain(context: &'static str, message: impl Into<String>) -> Self {
        Error::Domain {
            context,
            message: message.into(),
        }
    }

    pub(crate) fn validation(field: &'static str, message: impl Into<String>) -> Self {
        Error::Validation {
            video_id: None,
            field,
            message: message.into(),
        }
    }

    pub(crate) fn config(message: impl Into<String>) -> Self {
        Error::Config {
            message: message.into(),
        }
    }

    /// Attach a video id to a validation error that lacked one.
    #[must_use]
    pub fn for_video(mut self, id: &str) -> Self {
        if let Error::Validation { video_id, .. } = &mut self {
            if video_id.is_none() {
                *video_id = Some(String::from(id));
            }
        }
        self
    }

    /// The field name carried by validation errors, if any.
    pub fn field(&self) -> Option<&'static str> {
        match self {
            Error::Validation { field, .. } => Some(field),
            _ => None,
        }
    }
}
