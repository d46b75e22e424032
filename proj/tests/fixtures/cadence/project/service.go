package cadence

func (x *handler) run() {
	if s.config.EnableStickyQuery {
		x.apply()
	}
	if s.config.EnableAsyncProcessing {
		x.apply()
	}
}
