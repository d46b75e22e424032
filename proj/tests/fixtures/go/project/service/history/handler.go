package history

func (h *Handler) Start() {
	enabled := h.flags.WorkflowExecutionAlreadyCompletedErrorEnabled
	if h.config.EnableArchival {
		if enabled {
			h.log("done")
		}
	}
}
