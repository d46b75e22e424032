package cadence

func (x *handler) run() {
	if x.ready {
		if featureFlags.WorkflowExecutionAlreadyCompletedErrorEnabled {
			x.apply()
		}
		if flags.WorkflowExecutionAlreadyCompletedErrorEnabled {
			x.apply()
		}
		if *featureFlags.WorkflowExecutionAlreadyCompletedErrorEnabled {
			x.apply()
		}
	}
}
