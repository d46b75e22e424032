package frontend

func (h *Handler) Describe() {
	if h.isGlobal {
		if h.config.EnableGlobalDomain && *h.flags.EnableReadVisibility {
			h.describeGlobal()
		}
	}
	switch h.mode {
	case 1:
		if h.config.EnableArchival {
			h.archive()
		}
	}
}
