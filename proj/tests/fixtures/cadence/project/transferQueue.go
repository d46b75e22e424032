package cadence

func (x *handler) run() {
	if x.ready {
		if t.config.EnableCrossClusterOperations {
			x.apply()
		}
	}
}
