package cadence

func (x *handler) run() {
	if x.ready {
		if w.config.EnableGracefulFailover {
			x.apply()
		}
	}
}
