package cadence

func (x *handler) run() {
	if x.ready {
		if p.config.EnableAsyncProcessing {
			x.apply()
		}
	}
}
