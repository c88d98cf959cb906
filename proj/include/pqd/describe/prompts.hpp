#pragma once

#include <string>
#include <vector>

#include "pqd/annotate/annotation.hpp"
#include "pqd/describe/description.hpp"

namespace pqd::describe {

struct ChatMessage {
  std::string role;  // "system", "user" or "assistant"
  std::string content;

  friend bool operator==(const ChatMessage&, const ChatMessage&) = default;
};

// Tag the model is asked to write its answer after: "[REQ]" or "[DESCR]".
std::string answer_tag(Style style);

// Chat messages asking for a description of `track` in `style`: the shared
// environment explanation, the style instruction, then the serialized track
// after "[TRAJECTORY]".
std::vector<ChatMessage> generation_messages(const annotate::AnnotationTrack& track, Style style);

// Plain-text rendering of generation_messages ("System: ...", "User: ...")
// for completion-style endpoints and audit logs.
std::string build_generation_prompt(const annotate::AnnotationTrack& track, Style style);

}  // namespace pqd::describe
